"""Text format for labelled programs.

::

    r1: dead :- shoot, not ab.      % labelled rule
    r3: head v tails :- harvey.     % disjunctive head
    r1: fever v not fever :- infection.
    r2: fever <~ infection.         % causal-choice rule
    harvey.                         % fact, labelled by its own atom
    a: toss.                        % explicitly labelled fact
    :- a, b.                        % constraint
"""

from __future__ import annotations

import re

from caustic.errors import ProgramErrors, ProgramSyntaxError
from caustic.syntax.program import CHOICE, REGULAR, Program, Rule
from caustic.syntax.validate import check_program

KEYWORDS = frozenset({"v", "not"})

_TOKEN = re.compile(r"""
    (?P<ws>[ \t\r\n]+|%[^\n]*)
  | (?P<name>[a-z][A-Za-z0-9_]*)
  | (?P<op>:-|<~|[:,.])
""", re.VERBOSE)


class _Tokens:
    def __init__(self, text: str):
        self.items: list[tuple[str, str, int, int]] = []
        line, line_start, pos = 1, 0, 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if m is None:
                raise ProgramSyntaxError(f"unexpected character {text[pos]!r}",
                                         line, pos - line_start + 1)
            kind = m.lastgroup
            if kind != "ws":
                self.items.append((kind, m.group(), line, m.start() - line_start + 1))
            newlines = m.group().count("\n")
            if newlines:
                line += newlines
                line_start = m.start() + m.group().rindex("\n") + 1
            pos = m.end()
        self.eof = ("eof", "", line, pos - line_start + 1)
        self.i = 0

    def peek(self, k: int = 0) -> tuple[str, str, int, int]:
        j = self.i + k
        return self.items[j] if j < len(self.items) else self.eof

    def next(self) -> tuple[str, str, int, int]:
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, value: str) -> None:
        kind, text, line, col = self.next()
        if text != value:
            found = text or "end of input"
            raise ProgramSyntaxError(f"expected {value!r}, found {found!r}", line, col)

    def name(self, what: str) -> str:
        kind, text, line, col = self.next()
        if kind != "name":
            raise ProgramSyntaxError(f"expected {what}, found {text or 'end of input'!r}", line, col)
        if text in KEYWORDS:
            raise ProgramSyntaxError(f"{text!r} is a reserved word, not an {what}", line, col)
        return text


def _literals(toks: _Tokens, sep: str, what: str) -> tuple[list[str], list[str]]:
    pos: list[str] = []
    neg: list[str] = []
    while True:
        kind, text, line, col = toks.peek()
        negated = kind == "name" and text == "not"
        if negated:
            toks.next()
        atom = toks.name("atom")
        target = neg if negated else pos
        if atom in target:
            raise ProgramSyntaxError(f"atom {atom!r} repeated in {what}", line, col)
        target.append(atom)
        if toks.peek()[1] != sep:
            return pos, neg
        toks.next()


def _statement(toks: _Tokens, constraint_count: int) -> tuple[Rule, int, int]:
    _, _, line, col = toks.peek()
    label = None
    if toks.peek()[0] == "name" and toks.peek(1)[1] == ":":
        label = toks.name("label")
        toks.next()

    pos_head: list[str] = []
    neg_head: list[str] = []
    if toks.peek()[1] not in (":-", "<~"):
        pos_head, neg_head = _literals(toks, "v", "head")

    kind = REGULAR
    pos_body: list[str] = []
    neg_body: list[str] = []
    arrow = toks.peek()[1]
    if arrow in (":-", "<~"):
        toks.next()
        kind = CHOICE if arrow == "<~" else REGULAR
        if toks.peek()[1] != ".":
            pos_body, neg_body = _literals(toks, ",", "body")
    elif not pos_head and not neg_head:
        _, text, l2, c2 = toks.peek()
        raise ProgramSyntaxError(f"expected a head or ':-', found {text or 'end of input'!r}", l2, c2)
    toks.expect(".")

    if label is None:
        if not pos_head and not neg_head and kind == REGULAR:
            label = f"__c{constraint_count + 1}"
        elif len(pos_head) == 1 and not neg_head and not pos_body and not neg_body and kind == REGULAR:
            label = pos_head[0]
        else:
            raise ProgramSyntaxError("only facts and constraints may omit the rule label", line, col)
    rule = Rule(label, tuple(pos_head), tuple(neg_head), tuple(pos_body), tuple(neg_body), kind)
    return rule, line, col


def parse_program(text: str, validate: bool = True) -> Program:
    """Parse program text.

    Raises :class:`ProgramErrors` listing every syntax or validation problem
    found; syntax errors stop at the first bad statement.
    """
    try:
        toks = _Tokens(text)
    except ProgramSyntaxError as exc:
        raise ProgramErrors([exc]) from None
    rules: list[Rule] = []
    positions: list[tuple[int, int]] = []
    constraints = 0
    while toks.peek()[0] != "eof":
        try:
            rule, line, col = _statement(toks, constraints)
        except ProgramSyntaxError as exc:
            raise ProgramErrors([exc]) from None
        if rule.label.startswith("__c"):
            constraints += 1
        if rule in rules:
            # a program is a set of rules; a repeated statement adds nothing
            continue
        rules.append(rule)
        positions.append((line, col))
    program = Program(tuple(rules), positions=tuple(positions))
    if validate:
        errors = check_program(program)
        if errors:
            raise ProgramErrors(errors)
    return program
