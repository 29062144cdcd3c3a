"""Rule and program data types."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from functools import cached_property

from caustic.algebra.graphs import Label

REGULAR = "regular"
CHOICE = "causal_choice"


@dataclass(frozen=True)
class Rule:
    label: str
    pos_head: tuple[str, ...] = ()
    neg_head: tuple[str, ...] = ()
    pos_body: tuple[str, ...] = ()
    neg_body: tuple[str, ...] = ()
    kind: str = REGULAR

    def __post_init__(self):
        for name in ("pos_head", "neg_head", "pos_body", "neg_body"):
            atoms = getattr(self, name)
            if len(set(atoms)) != len(atoms):
                raise ValueError(f"rule {self.label}: duplicate atom in {name}")
        if self.kind not in (REGULAR, CHOICE):
            raise ValueError(f"unknown rule kind {self.kind!r}")

    @property
    def is_choice(self) -> bool:
        return self.kind == CHOICE

    @property
    def is_constraint(self) -> bool:
        return not self.pos_head and not self.neg_head

    @property
    def is_normal(self) -> bool:
        return len(self.pos_head) == 1 and not self.neg_head

    @property
    def is_fact(self) -> bool:
        return self.is_normal and not self.pos_body and not self.neg_body and not self.is_choice

    @property
    def is_positive(self) -> bool:
        return not self.neg_head and not self.neg_body

    @property
    def atoms(self) -> frozenset[str]:
        return frozenset(self.pos_head + self.neg_head + self.pos_body + self.neg_body)

    def as_regular(self) -> Rule:
        """The ordinary rule obtained by reading ``<~`` as ``:-``."""
        return replace(self, kind=REGULAR) if self.is_choice else self


def fact(atom: str, label: str | None = None) -> Rule:
    return Rule(label or atom, (atom,))


@dataclass(frozen=True)
class Program:
    rules: tuple[Rule, ...] = ()
    shared_labels: frozenset[str] = frozenset()
    """Labels allowed to repeat (the rule family emitted by the choice rewriting)."""
    positions: tuple[tuple[int, int], ...] | None = field(default=None, compare=False, repr=False)

    @cached_property
    def atoms(self) -> frozenset[str]:
        out: set[str] = set()
        for r in self.rules:
            out |= r.atoms
        return frozenset(out)

    @cached_property
    def rule_labels(self) -> frozenset[str]:
        return frozenset(r.label for r in self.rules)

    @property
    def labels(self) -> frozenset[Label]:
        """Every label of the signature: atoms, plus rule labels that are not atoms."""
        out = {Label(a, "atom") for a in self.atoms}
        out |= {Label(r.label, "rule") for r in self.rules if r.label not in self.atoms}
        return frozenset(out)

    @cached_property
    def normal_labels(self) -> frozenset[str]:
        return frozenset(r.label for r in self.rules if r.is_normal and not r.is_choice)

    @property
    def choice_rules(self) -> tuple[Rule, ...]:
        return tuple(r for r in self.rules if r.is_choice)

    @property
    def has_choice(self) -> bool:
        return any(r.is_choice for r in self.rules)

    def position(self, index: int) -> tuple[int, int] | tuple[None, None]:
        if self.positions is None:
            return None, None
        return self.positions[index]

    def __len__(self) -> int:
        return len(self.rules)
