"""DOT and JSON renderings of solver output."""

from __future__ import annotations

import json
from collections.abc import Iterable, Sequence

from caustic.algebra.graphs import CausalGraph, strip_atom_edges
from caustic.algebra.render import RenderOptions, display_edges, format_value
from caustic.algebra.values import CausalValue
from caustic.engine.interpretation import Interpretation
from caustic.errors import AtomFalse


def stripped(v: CausalValue, atoms: Iterable[str]) -> CausalValue:
    atoms = frozenset(atoms)
    return CausalValue.of(strip_atom_edges(g, atoms) for g in v.graphs)


def _quote(name: str) -> str:
    return '"' + name.replace('"', '\\"') + '"'


def graph_to_dot(g: CausalGraph, name: str, opts: RenderOptions = RenderOptions()) -> str:
    edges = display_edges(g, opts)
    nodes = sorted({v for e in edges for v in e})
    atoms = opts.atoms or frozenset()
    lines = [f"digraph {name} {{"]
    for v in nodes:
        shape = "ellipse" if v in atoms else "box"
        lines.append(f"  {_quote(v)} [shape={shape}];")
    for a, b in sorted(edges):
        if a != b:
            lines.append(f"  {_quote(a)} -> {_quote(b)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_dot(model: Interpretation, atom: str, opts: RenderOptions = RenderOptions(),
               strip: bool = False) -> str:
    """One digraph per justification of ``atom``, drawn from its transitive reduction."""
    value = model[atom]
    if not value.graphs:
        raise AtomFalse(atom)
    if strip and opts.atoms is not None:
        value = stripped(value, opts.atoms)
    return "".join(graph_to_dot(g, f"{atom}_j{n}", opts)
                   for n, g in enumerate(value.sorted_graphs, start=1))


def value_to_json(v: CausalValue, opts: RenderOptions = RenderOptions()) -> dict:
    return {
        "term": format_value(v, opts),
        "graphs": [[list(e) for e in sorted(g.edges)] for g in v.sorted_graphs],
    }


def export_json(models: Sequence, mode: str, atoms: Iterable[str] = (),
                opts: RenderOptions = RenderOptions()) -> str:
    """Serialize models; ``models`` holds atom sets (standard mode) or interpretations.

    In causal mode every atom in ``atoms`` gets an entry, false ones with
    ``"graphs": []``.  Graphs are listed as full closed edge lists.
    """
    out = []
    for m in models:
        if isinstance(m, Interpretation):
            names = sorted(set(atoms) | m.atoms)
            out.append({"atoms": sorted(m.atoms),
                        "values": {a: value_to_json(m[a], opts) for a in names}})
        else:
            out.append({"atoms": sorted(m), "values": {}})
    return json.dumps({"mode": mode, "models": out}, indent=2, ensure_ascii=False) + "\n"


def values_from_json(text: str) -> list[dict[str, CausalValue]]:
    """Rebuild the per-model values written by :func:`export_json`."""
    data = json.loads(text)
    return [
        {a: CausalValue.of(CausalGraph.of(tuple(e) for e in g) for g in entry["graphs"])
         for a, entry in model["values"].items()}
        for model in data["models"]
    ]
