"""The causal value algebra: graphs, antichain values, terms and rendering."""

from caustic.algebra.graphs import (
    EMPTY,
    CausalGraph,
    Label,
    close,
    graph_apply,
    graph_product,
    strip_atom_edges,
    transitive_reflexive_reduction,
    vertex,
)
from caustic.algebra.render import RenderOptions, display_edges, format_graph, format_value, options_for
from caustic.algebra.terms import (
    App,
    Atom,
    Product,
    Sum,
    Term,
    eval_term,
    format_term,
    graph_to_term,
    parse_term,
    value_of,
    value_to_term,
)
from caustic.algebra.values import (
    ONE,
    ZERO,
    CausalValue,
    minimize,
    value_apply,
    value_leq,
    value_product,
    value_product_all,
    value_sum,
    value_sum_all,
)

__all__ = [
    "EMPTY", "ONE", "ZERO", "App", "Atom", "CausalGraph", "CausalValue", "Label", "Product",
    "RenderOptions", "Sum", "Term", "close", "display_edges", "eval_term", "format_graph",
    "format_term", "format_value", "graph_apply", "graph_product", "graph_to_term", "minimize",
    "options_for", "parse_term", "strip_atom_edges", "transitive_reflexive_reduction",
    "value_apply", "value_leq", "value_of", "value_product", "value_product_all", "value_sum",
    "value_sum_all", "value_to_term", "vertex",
]
