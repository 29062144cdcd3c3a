"""Term syntax trees, their text form, and normalization into causal values.

Text syntax: ``+`` (addition) binds loosest, then ``*`` (product), then
application written ``.`` or ``·``; ``r^A`` is sugar for ``r . A`` and binds
tightest.  ``0`` and ``1`` are the empty sum and the empty product.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from caustic.algebra.graphs import CausalGraph
from caustic.algebra.values import ONE, ZERO, CausalValue, value_apply, value_product, value_sum
from caustic.errors import TermSyntaxError


@dataclass(frozen=True)
class Atom:
    """An occurrence of a label inside a term."""

    label: str


@dataclass(frozen=True)
class Product:
    factors: tuple[Term, ...] = ()


@dataclass(frozen=True)
class Sum:
    addends: tuple[Term, ...] = ()


@dataclass(frozen=True)
class App:
    left: Term
    right: Term


Term = Union[Atom, Product, Sum, App]


def eval_term(t: Term) -> CausalValue:
    if isinstance(t, Atom):
        return CausalValue.label(t.label)
    if isinstance(t, Product):
        acc = ONE
        for f in t.factors:
            acc = value_product(acc, eval_term(f))
        return acc
    if isinstance(t, Sum):
        acc = ZERO
        for a in t.addends:
            acc = value_sum(acc, eval_term(a))
        return acc
    if isinstance(t, App):
        return value_apply(eval_term(t.left), eval_term(t.right))
    raise TypeError(f"not a term: {t!r}")


def graph_to_term(g: CausalGraph) -> Product:
    """One factor ``a·b`` per non-reflexive edge; isolated vertices stay bare."""
    factors: list[Term] = [App(Atom(a), Atom(b)) for a, b in g.proper_edges]
    linked = {v for e in g.proper_edges for v in e}
    factors += [Atom(v) for v in sorted(g.vertices - linked)]
    return Product(tuple(factors))


def value_to_term(v: CausalValue) -> Term:
    if len(v.graphs) == 1:
        return graph_to_term(v.sorted_graphs[0])
    return Sum(tuple(graph_to_term(g) for g in v.sorted_graphs))


# -- text form -----------------------------------------------------------------

def format_term(t: Term, ascii: bool = False) -> str:
    dot = "." if ascii else "·"

    def fmt(t: Term, ctx: int) -> str:
        if isinstance(t, Atom):
            return t.label
        if isinstance(t, Sum):
            if not t.addends:
                return "0"
            if len(t.addends) == 1:
                return fmt(t.addends[0], ctx)
            s = " + ".join(fmt(a, 0) for a in t.addends)
            return f"({s})" if ctx > 0 else s
        if isinstance(t, Product):
            if not t.factors:
                return "1"
            if len(t.factors) == 1:
                return fmt(t.factors[0], ctx)
            s = " * ".join(fmt(f, 1) for f in t.factors)
            return f"({s})" if ctx > 1 else s
        if isinstance(t, App):
            # right operand gets a tighter context so a·(b·c) keeps its parens
            s = f"{fmt(t.left, 2)}{dot}{fmt(t.right, 3)}"
            return f"({s})" if ctx > 2 else s
        raise TypeError(f"not a term: {t!r}")

    return fmt(t, 0)


_TOKEN = re.compile(r"\s*(?:(?P<name>[a-z][A-Za-z0-9_]*)|(?P<const>[01])|(?P<op>[+*.·^()]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise TermSyntaxError(pos, f"unexpected character {text[pos]!r}")
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


def parse_term(text: str) -> Term:
    tokens = _tokenize(text)
    i = 0

    def peek() -> tuple[str, str, int]:
        return tokens[i]

    def take(value: str | None = None) -> tuple[str, str, int]:
        nonlocal i
        tok = tokens[i]
        if value is not None and tok[1] != value:
            raise TermSyntaxError(tok[2], f"expected {value!r}, got {tok[1] or 'end of input'!r}")
        i += 1
        return tok

    def sum_() -> Term:
        items = [product()]
        while peek()[1] == "+":
            take()
            items.append(product())
        return items[0] if len(items) == 1 else Sum(tuple(items))

    def product() -> Term:
        items = [application()]
        while peek()[1] == "*":
            take()
            items.append(application())
        return items[0] if len(items) == 1 else Product(tuple(items))

    def application() -> Term:
        t = superscript()
        while peek()[1] in (".", "·"):
            take()
            t = App(t, superscript())
        return t

    def superscript() -> Term:
        t = primary()
        if peek()[1] == "^":
            take()
            t = App(t, primary())
        return t

    def primary() -> Term:
        kind, value, pos = take()
        if kind == "name":
            return Atom(value)
        if kind == "const":
            return Product() if value == "1" else Sum()
        if value == "(":
            t = sum_()
            take(")")
            return t
        raise TermSyntaxError(pos, f"unexpected {value or 'end of input'!r}")

    t = sum_()
    if peek()[0] != "end":
        raise TermSyntaxError(peek()[2], f"trailing input {peek()[1]!r}")
    return t


def value_of(text: str) -> CausalValue:
    """Shorthand: parse and normalize a term."""
    return eval_term(parse_term(text))
