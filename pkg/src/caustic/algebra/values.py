"""Causal values as antichains of causal graphs (minimal disjunctive normal form)."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from functools import cached_property

from caustic.algebra.graphs import EMPTY, CausalGraph, graph_apply, graph_product, vertex


def minimize(graphs: Iterable[CausalGraph]) -> frozenset[CausalGraph]:
    """Keep only the subset-minimal graphs (a superset graph is a weaker cause)."""
    pool = sorted(set(graphs), key=len)
    kept: list[CausalGraph] = []
    for g in pool:
        if not any(k.edges <= g.edges for k in kept):
            kept.append(g)
    return frozenset(kept)


@dataclass(frozen=True)
class CausalValue:
    """A finite antichain of causal graphs.

    The empty antichain is 0 and ``{EMPTY}`` is 1.  Use :meth:`of` to build a
    value from arbitrary graphs; the raw constructor trusts its input.
    """

    graphs: frozenset[CausalGraph]

    @classmethod
    def of(cls, graphs: Iterable[CausalGraph] = ()) -> CausalValue:
        return cls(minimize(graphs))

    @classmethod
    def label(cls, name: str) -> CausalValue:
        return cls(frozenset({vertex(name)}))

    @cached_property
    def sorted_graphs(self) -> tuple[CausalGraph, ...]:
        return tuple(sorted(self.graphs, key=lambda g: g.sort_key))

    @cached_property
    def sort_key(self) -> tuple:
        return tuple(g.sort_key for g in self.sorted_graphs)

    @property
    def is_zero(self) -> bool:
        return not self.graphs

    @property
    def is_one(self) -> bool:
        return self.graphs == ONE.graphs

    def __bool__(self) -> bool:
        return bool(self.graphs)

    def __add__(self, other: CausalValue) -> CausalValue:
        return value_sum(self, other)

    def __mul__(self, other: CausalValue) -> CausalValue:
        return value_product(self, other)

    def __le__(self, other: CausalValue) -> bool:
        return value_leq(self, other)

    def __lt__(self, other: CausalValue) -> bool:
        return self != other and value_leq(self, other)

    def __iter__(self):
        return iter(self.sorted_graphs)

    def __len__(self) -> int:
        return len(self.graphs)

    def __repr__(self) -> str:
        if not self.graphs:
            return "CausalValue(0)"
        return f"CausalValue({' + '.join(repr(g) for g in self.sorted_graphs)})"


ZERO = CausalValue(frozenset())
ONE = CausalValue(frozenset({EMPTY}))


def value_sum(v: CausalValue, v2: CausalValue) -> CausalValue:
    if not v.graphs:
        return v2
    if not v2.graphs:
        return v
    return CausalValue(minimize(v.graphs | v2.graphs))


def value_product(v: CausalValue, v2: CausalValue) -> CausalValue:
    if not v.graphs or not v2.graphs:
        return ZERO
    return CausalValue(minimize(graph_product(g, g2) for g in v.graphs for g2 in v2.graphs))


def value_apply(v: CausalValue, v2: CausalValue) -> CausalValue:
    if not v.graphs or not v2.graphs:
        return ZERO
    return CausalValue(minimize(graph_apply(g, g2) for g in v.graphs for g2 in v2.graphs))


def value_leq(v: CausalValue, v2: CausalValue) -> bool:
    """``v <= v2``: every cause in ``v`` contains some cause of ``v2``."""
    return all(any(g2.edges <= g.edges for g2 in v2.graphs) for g in v.graphs)


def value_sum_all(values: Iterable[CausalValue]) -> CausalValue:
    graphs: set[CausalGraph] = set()
    for v in values:
        graphs |= v.graphs
    return CausalValue.of(graphs)


def value_product_all(values: Iterable[CausalValue]) -> CausalValue:
    acc = ONE
    for v in values:
        acc = value_product(acc, v)
        if not acc.graphs:
            break
    return acc
