from caustic.algebra import (
    ONE,
    ZERO,
    CausalGraph,
    RenderOptions,
    display_edges,
    format_graph,
    format_value,
    options_for,
    value_of,
)

ATOMS = {"harvey", "shoot", "dead", "tails"}
NORMAL = {"r1", "r2", "harvey"}


def test_constants():
    assert format_value(ZERO) == "0"
    assert format_value(ONE) == "1"


def test_plain_chain():
    assert format_value(value_of("a.b.c")) == "a·b·c"
    assert format_value(value_of("a.b.c"), RenderOptions(ascii=True)) == "a.b.c"


def test_head_sugar():
    v = value_of("harvey.r3^tails.r2^shoot.r1^dead")
    opts = options_for(ATOMS, NORMAL)
    assert format_value(v, opts) == "harvey·r3^tails·r2^shoot·r1^dead"


def test_omit_normal_heads():
    v = value_of("harvey.r2^shoot.r1^dead")
    opts = options_for(ATOMS, NORMAL, omit_normal_heads=True)
    assert format_value(v, opts) == "harvey·r2·r1"
    assert value_of(format_value(v, opts)) == value_of("harvey.r2.r1")


def test_omit_keeps_heads_of_other_rules():
    v = value_of("harvey.r3^tails.r2^shoot.r1^dead")
    opts = options_for(ATOMS, NORMAL, omit_normal_heads=True)
    assert format_value(v, opts) == "harvey·r3^tails·r2·r1"


def test_join_of_two_causes():
    v = value_of("(a.r1 * b.r2).r3")
    assert format_value(v) == "(a·r1 * b·r2)·r3"


def test_product_of_sinks():
    assert format_value(value_of("a * b")) == "a * b"


def test_sum_in_canonical_order():
    v = value_of("infection.r1^fever + r2")
    opts = options_for({"infection", "fever"}, {"infection", "r2"})
    assert format_value(v, opts) == "r2 + infection·r1^fever"


def test_cycle_falls_back_to_edge_term():
    g = CausalGraph.of([("a", "b"), ("b", "a")])
    out = format_graph(g, RenderOptions(ascii=True))
    assert value_of(out).graphs == {g}


def test_display_edges_contracts_atoms():
    v = value_of("harvey.r2^shoot.r1^dead")
    (g,) = v.graphs
    opts = options_for(ATOMS, NORMAL, omit_normal_heads=True)
    assert display_edges(g, opts) == {("harvey", "r2"), ("r2", "r1")}
    full = {("harvey", "r2"), ("r2", "shoot"), ("shoot", "r1"), ("r1", "dead")}
    assert display_edges(g, options_for(ATOMS, NORMAL)) == full


def test_render_parses_back():
    for text in ["a.b + c.d", "(a * b).c", "a.b.c + a.c", "x"]:
        v = value_of(text)
        assert value_of(format_value(v, RenderOptions(ascii=True))) == v
