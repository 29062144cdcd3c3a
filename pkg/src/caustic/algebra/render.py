"""Human-readable rendering of causal values.

Each graph is drawn from its transitive reduction as a nested chain:
a vertex with causes ``p1 .. pn`` prints as ``(p1 * .. * pn)·v``, and the
graph is the product of its sinks.  A rule label ``r`` immediately followed
by an atom ``A`` it produced prints as ``r^A``.
"""

from __future__ import annotations

from collections.abc import Set
from dataclasses import dataclass, field

from caustic.algebra.graphs import CausalGraph, close, has_proper_cycle, transitive_reflexive_reduction
from caustic.algebra.terms import format_term, graph_to_term
from caustic.algebra.values import CausalValue


@dataclass(frozen=True)
class RenderOptions:
    atoms: frozenset[str] | None = None
    """Atom names; without them no ``r^A`` sugar is applied."""
    normal_labels: frozenset[str] = frozenset()
    """Labels of normal rules and facts, whose head atom may be left out."""
    omit_normal_heads: bool = False
    ascii: bool = False


def display_edges(g: CausalGraph, opts: RenderOptions = RenderOptions()) -> frozenset[tuple[str, str]]:
    """Reduced edge set used for display.

    With ``omit_normal_heads`` every atom whose only cause is a normal rule is
    contracted into that rule.  Cyclic graphs are returned unreduced.
    """
    edges = transitive_reflexive_reduction(g, strict=False)
    if not (opts.omit_normal_heads and opts.atoms is not None) or has_proper_cycle(g):
        return edges
    preds: dict[str, set[str]] = {}
    for a, b in edges:
        if a != b:
            preds.setdefault(b, set()).add(a)
    merge = {}
    for v, ps in preds.items():
        if v in opts.atoms and len(ps) == 1:
            (r,) = ps
            if r not in opts.atoms and r in opts.normal_labels:
                merge[v] = r
    if not merge:
        return edges
    renamed = {(merge.get(a, a), merge.get(b, b)) for a, b in edges}
    return transitive_reflexive_reduction(CausalGraph(close(renamed)))


def format_graph(g: CausalGraph, opts: RenderOptions = RenderOptions()) -> str:
    dot = "." if opts.ascii else "·"
    if has_proper_cycle(g):
        return format_term(graph_to_term(g), ascii=opts.ascii)
    edges = display_edges(g, opts)
    preds: dict[str, list[str]] = {}
    has_succ = set()
    for a, b in edges:
        preds.setdefault(a, [])
        preds.setdefault(b, [])
        if a != b:
            preds[b].append(a)
            has_succ.add(a)
    atoms = opts.atoms or frozenset()
    memo: dict[str, str] = {}

    def render(v: str) -> str:
        if v in memo:
            return memo[v]
        ps = preds[v]
        if not ps:
            out = v
        elif len(ps) == 1 and v in atoms and ps[0] not in atoms:
            out = f"{render(ps[0])}^{v}"
        else:
            causes = sorted(render(p) for p in ps)
            inner = causes[0] if len(causes) == 1 else f"({' * '.join(causes)})"
            out = f"{inner}{dot}{v}"
        memo[v] = out
        return out

    sinks = sorted(render(v) for v in preds if v not in has_succ)
    if not sinks:
        return "1"
    return " * ".join(sinks)


def format_value(v: CausalValue, opts: RenderOptions = RenderOptions()) -> str:
    if not v.graphs:
        return "0"
    return " + ".join(format_graph(g, opts) for g in v.sorted_graphs)


def options_for(atoms: Set[str], normal_labels: Set[str], omit_normal_heads: bool = False,
                ascii: bool = False) -> RenderOptions:
    return RenderOptions(frozenset(atoms), frozenset(normal_labels), omit_normal_heads, ascii)
