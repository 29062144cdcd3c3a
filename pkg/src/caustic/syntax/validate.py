"""Static checks on parsed programs."""

from __future__ import annotations

from caustic.errors import DuplicateLabel, EmptyChoiceHead, LabelAtomClash, ProgramError, ProgramErrors
from caustic.syntax.program import Program


def check_program(p: Program) -> list[ProgramError]:
    """Return every problem found in ``p`` (an empty list means valid)."""
    errors: list[ProgramError] = []
    seen: set[str] = set()
    atoms = p.atoms
    for i, r in enumerate(p.rules):
        line, col = p.position(i)
        if r.label in seen and r.label not in p.shared_labels:
            errors.append(DuplicateLabel(r.label, line, col))
        seen.add(r.label)
        # a label may name an atom only as a fact labelled by its own head
        if r.label in atoms and not (r.is_fact and r.pos_head == (r.label,)):
            errors.append(LabelAtomClash(r.label, line, col))
        if r.is_choice and not r.pos_head:
            errors.append(EmptyChoiceHead(r.label, line, col))
    return errors


def validate_program(p: Program) -> Program:
    """Raise :class:`ProgramErrors` if ``p`` is invalid, else return it."""
    errors = check_program(p)
    if errors:
        raise ProgramErrors(errors)
    return p
