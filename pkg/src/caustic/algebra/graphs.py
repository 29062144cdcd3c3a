"""Causal graphs: reflexively and transitively closed edge sets over labels.

A graph stands for one individual cause.  Vertices are plain label names;
whether a vertex is an atom or a rule label is a property of the program, not
of the graph, so operations that care (``strip_atom_edges``) take the atom set
explicitly.
"""

from __future__ import annotations

from collections.abc import Iterable, Set
from dataclasses import dataclass
from functools import cached_property

from caustic.errors import NotUniquelyReducible

Edge = tuple[str, str]


@dataclass(frozen=True, order=True)
class Label:
    """A vertex name together with its namespace (``"rule"`` or ``"atom"``)."""

    name: str
    kind: str = "rule"

    def __post_init__(self):
        if not self.name:
            raise ValueError("label name must be non-empty")
        if self.kind not in ("rule", "atom"):
            raise ValueError(f"unknown label kind {self.kind!r}")


def close(edges: Iterable[Edge]) -> frozenset[Edge]:
    """Reflexive-transitive closure of an edge set."""
    succ: dict[str, set[str]] = {}
    for a, b in edges:
        succ.setdefault(a, set()).add(b)
        succ.setdefault(b, set())
    closed = set()
    for start in succ:
        seen = {start}
        stack = [start]
        while stack:
            for nxt in succ[stack.pop()]:
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        closed.update((start, v) for v in seen)
    return frozenset(closed)


@dataclass(frozen=True)
class CausalGraph:
    """An immutable causal graph.

    ``edges`` always holds the full closed relation, reflexive pairs included,
    so subgraph tests are plain set inclusion.  Build instances through
    :meth:`of` (or :func:`vertex`), which closes the input.
    """

    edges: frozenset[Edge]

    @classmethod
    def of(cls, edges: Iterable[Edge] = ()) -> CausalGraph:
        return cls(close(edges))

    @cached_property
    def vertices(self) -> frozenset[str]:
        return frozenset(a for a, _ in self.edges)

    @cached_property
    def proper_edges(self) -> tuple[Edge, ...]:
        """Non-reflexive edges, sorted."""
        return tuple(sorted((a, b) for a, b in self.edges if a != b))

    @cached_property
    def sort_key(self) -> tuple:
        return (len(self.edges), tuple(sorted(self.edges)))

    def is_closed(self) -> bool:
        return close(self.edges) == self.edges

    def is_subgraph_of(self, other: CausalGraph) -> bool:
        # subgraph inclusion; the value order runs the other way
        return self.edges <= other.edges

    def __len__(self) -> int:
        return len(self.edges)

    def __repr__(self) -> str:
        if not self.edges:
            return "CausalGraph(1)"
        isolated = sorted(v for v in self.vertices
                          if not any(v in e for e in self.proper_edges))
        parts = [f"{a}->{b}" for a, b in transitive_reflexive_reduction(self, strict=False)
                 if a != b] + isolated
        return f"CausalGraph({', '.join(parts)})"


EMPTY = CausalGraph(frozenset())


def vertex(label: str) -> CausalGraph:
    """The single-vertex graph of a label."""
    return CausalGraph(frozenset({(label, label)}))


def graph_product(g: CausalGraph, g2: CausalGraph) -> CausalGraph:
    """Joint causation: closure of the union."""
    if not g.edges:
        return g2
    if not g2.edges or g.edges == g2.edges:
        return g
    return CausalGraph(close(g.edges | g2.edges))


def graph_apply(g: CausalGraph, g2: CausalGraph) -> CausalGraph:
    """Application ``g · g2``: every vertex of ``g`` points at every vertex of ``g2``."""
    if not g.edges:
        return g2
    if not g2.edges:
        return g
    cross = {(v, w) for v in g.vertices for w in g2.vertices}
    return CausalGraph(close(g.edges | g2.edges | cross))


def has_proper_cycle(g: CausalGraph) -> bool:
    return any(a != b and (b, a) in g.edges for a, b in g.edges)


def transitive_reflexive_reduction(g: CausalGraph, strict: bool = True) -> frozenset[Edge]:
    """The minimal edge set whose reflexive-transitive closure is ``g``.

    Isolated vertices keep their reflexive pair, since otherwise they would
    vanish from the closure.  Raises :class:`NotUniquelyReducible` when ``g``
    has a cycle other than a self-loop; with ``strict=False`` the unreduced
    non-reflexive edges (plus isolated vertices) are returned instead.
    """
    proper = [(a, b) for a, b in g.edges if a != b]
    if has_proper_cycle(g):
        touched = {v for e in proper for v in e}
        fallback = frozenset(proper) | {(v, v) for v in g.vertices - touched}
        if strict:
            raise NotUniquelyReducible(g, fallback)
        return fallback
    succ: dict[str, set[str]] = {}
    for a, b in proper:
        succ.setdefault(a, set()).add(b)
    kept = set()
    for a, b in proper:
        # (a, b) is implied iff some intermediate c has a -> c -> b
        if not any(b in succ.get(c, ()) for c in succ[a] if c != b):
            kept.add((a, b))
    touched = {v for e in proper for v in e}
    kept.update((v, v) for v in g.vertices - touched)
    return frozenset(kept)


def strip_atom_edges(g: CausalGraph, atoms: Set[str]) -> CausalGraph:
    """Drop every edge that has an atom at either end."""
    return CausalGraph.of((a, b) for a, b in g.edges if a not in atoms and b not in atoms)
