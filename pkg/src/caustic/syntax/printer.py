from __future__ import annotations

from caustic.syntax.program import Program, Rule


def _implicit_label(r: Rule) -> bool:
    return r.label.startswith("__c") or (r.is_fact and r.pos_head == (r.label,))


def print_rule(r: Rule) -> str:
    head = " v ".join([*r.pos_head, *(f"not {a}" for a in r.neg_head)])
    body = ", ".join([*r.pos_body, *(f"not {a}" for a in r.neg_body)])
    prefix = "" if _implicit_label(r) else f"{r.label}: "
    if r.is_choice:
        return f"{prefix}{head} <~ {body}." if body else f"{prefix}{head} <~ ."
    if not body:
        return f"{prefix}{head}." if head else f"{prefix}:- ."
    if not head:
        return f"{prefix}:- {body}."
    return f"{prefix}{head} :- {body}."


def print_program(p: Program) -> str:
    """Canonical text for ``p``; parsing it back gives an equal program."""
    return "".join(print_rule(r) + "\n" for r in p.rules)
