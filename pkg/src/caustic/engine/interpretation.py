from __future__ import annotations

from collections.abc import Iterable, Mapping
from functools import cached_property

from caustic.algebra.values import ONE, ZERO, CausalValue, value_apply, value_leq, value_product
from caustic.syntax.program import Program, Rule


class Interpretation:
    """A total map from atoms to causal values; atoms not stored hold 0.

    Immutable and hashable.  Two interpretations are equal when they agree on
    every atom, so explicit zeros are dropped on construction.
    """

    def __init__(self, values: Mapping[str, CausalValue] | Iterable[tuple[str, CausalValue]] = ()):
        items = values.items() if isinstance(values, Mapping) else values
        self._values: dict[str, CausalValue] = {a: v for a, v in items if v.graphs}

    @classmethod
    def bottom(cls) -> Interpretation:
        return cls()

    @classmethod
    def top(cls, atoms: Iterable[str]) -> Interpretation:
        return cls({a: ONE for a in atoms})

    def __getitem__(self, atom: str) -> CausalValue:
        return self._values.get(atom, ZERO)

    def items(self):
        return sorted(self._values.items())

    @cached_property
    def atoms(self) -> frozenset[str]:
        """The true atoms."""
        return frozenset(self._values)

    @cached_property
    def _frozen(self) -> frozenset:
        return frozenset(self._values.items())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Interpretation):
            return NotImplemented
        return self._values == other._values

    def __hash__(self) -> int:
        return hash(self._frozen)

    def __le__(self, other: Interpretation) -> bool:
        """Pointwise value order."""
        return all(value_leq(v, other[a]) for a, v in self._values.items())

    def __repr__(self) -> str:
        inner = ", ".join(f"{a}: {v!r}" for a, v in self.items())
        return f"Interpretation({{{inner}}})"

    @cached_property
    def sort_key(self) -> tuple:
        atoms = tuple(sorted(self.atoms))
        return (len(atoms), atoms, tuple(v.sort_key for _, v in self.items()))


def interp_leq(i: Interpretation, j: Interpretation) -> bool:
    return i <= j


def interp_sqleq(i: Interpretation, j: Interpretation) -> bool:
    """The weak order: pointwise below, or strictly fewer true atoms."""
    return i.atoms < j.atoms or i <= j


def interp_sqless(i: Interpretation, j: Interpretation) -> bool:
    return i != j and interp_sqleq(i, j)


def standardize(i: Interpretation) -> tuple[Interpretation, frozenset[str]]:
    """The two-valued interpretation with the same true atoms, and those atoms."""
    return Interpretation({a: ONE for a in i.atoms}), i.atoms


def literal_value(i: Interpretation, atom: str, negated: bool = False) -> CausalValue:
    if negated:
        return ZERO if i[atom].graphs else ONE
    return i[atom]


def eval_body(i: Interpretation, r: Rule) -> CausalValue:
    acc = ONE
    for b in r.pos_body:
        acc = value_product(acc, i[b])
        if not acc.graphs:
            return ZERO
    for b in r.neg_body:
        if i[b].graphs:
            return ZERO
    return acc


def head_contribution(body: CausalValue, r: Rule, atom: str) -> CausalValue:
    """``body · r · atom``: the cause a rule passes to one of its head atoms."""
    return value_apply(value_apply(body, CausalValue.label(r.label)), CausalValue.label(atom))


def satisfies_rule(i: Interpretation, r: Rule) -> bool:
    """Model condition for one rule (a choice rule is checked in its ordinary form).

    A negative head literal ``not H`` is satisfied when ``H`` is false; a rule
    whose body evaluates to 0 is satisfied outright, which also settles
    constraints.
    """
    body = eval_body(i, r)
    if not body.graphs:
        return True
    if any(not i[h].graphs for h in r.neg_head):
        return True
    return any(value_leq(head_contribution(body, r, h), i[h]) for h in r.pos_head)


def is_model(i: Interpretation, p: Program) -> bool:
    return all(satisfies_rule(i, r) for r in p.rules)
