from __future__ import annotations

from collections.abc import Set
from dataclasses import replace

from caustic.syntax.program import Program


def gl_reduct(p: Program, s: Set[str]) -> Program:
    """Reduct of a choice-free program with respect to the true atoms ``s``.

    Drops rules blocked by a true negated body atom or by a false negated head
    atom, then deletes all remaining negative literals.  Since only truth
    matters, the same function serves causal interpretations via their atoms.
    """
    rules = []
    for r in p.rules:
        if r.is_choice:
            raise ValueError(f"choice rule {r.label!r} in gl_reduct; use choice_reduct")
        if any(b in s for b in r.neg_body):
            continue
        if any(h not in s for h in r.neg_head):
            continue
        rules.append(replace(r, neg_head=(), neg_body=()) if not r.is_positive else r)
    return Program(tuple(rules), p.shared_labels)


def choice_program(p: Program, chosen: Set[int]) -> Program:
    """Regular rules of ``p`` plus the ordinary form of the choice rules indexed by ``chosen``."""
    rules = tuple(r.as_regular() for i, r in enumerate(p.rules) if not r.is_choice or i in chosen)
    return Program(rules, p.shared_labels)
