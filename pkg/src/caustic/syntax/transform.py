from __future__ import annotations

from dataclasses import replace

from caustic.errors import NotAChoiceRule
from caustic.syntax.program import REGULAR, Program, Rule


def rchoice_transform(p: Program, r: Rule) -> Program:
    """Replace causal-choice rule ``r`` by one ordinary rule per positive head atom.

    For each ``A`` in the positive head the new rule's head is the original
    head with ``not A`` added; all of them keep ``r``'s label.  Negative head
    literals are stored apart from positive ones, so the position of the new
    ``not A`` within the head is immaterial.
    """
    if not r.is_choice:
        raise NotAChoiceRule(f"rule {r.label!r} is not a causal-choice rule")
    if r not in p.rules:
        raise ValueError(f"rule {r.label!r} is not part of the program")
    family = []
    for a in r.pos_head:
        neg = r.neg_head if a in r.neg_head else (a, *r.neg_head)
        family.append(replace(r, neg_head=neg, kind=REGULAR))
    rules: list[Rule] = []
    positions: list[tuple[int, int]] = []
    for i, rule in enumerate(p.rules):
        if rule == r:
            rules.extend(family)
            positions.extend([p.position(i)] * len(family))
        else:
            rules.append(rule)
            positions.append(p.position(i))
    return Program(tuple(rules), p.shared_labels | {r.label},
                   positions=tuple(positions) if p.positions is not None else None)


def rchoice_all(p: Program) -> Program:
    """Apply :func:`rchoice_transform` to every causal-choice rule of ``p``."""
    for r in p.choice_rules:
        p = rchoice_transform(p, r)
    return p
