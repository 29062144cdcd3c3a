"""Exception types shared across the package."""

from __future__ import annotations


class CausticError(Exception):
    """Base class for all errors raised by caustic."""


class NotUniquelyReducible(CausticError):
    """A causal graph has a non-reflexive cycle, so its reduction is not unique.

    Carries the unreduced edge set so callers can still display something.
    """

    def __init__(self, graph, edges):
        super().__init__("graph has a non-reflexive cycle; no unique reduction")
        self.graph = graph
        self.edges = edges


class TermSyntaxError(CausticError):
    def __init__(self, pos: int, message: str):
        super().__init__(f"at offset {pos}: {message}")
        self.pos = pos
        self.message = message


class ProgramError(CausticError):
    """A single problem found while parsing or validating a program."""

    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        super().__init__(message)
        self.message = message
        self.line = line
        self.col = col

    def location(self) -> str:
        return "" if self.line is None else f"{self.line}:{self.col}: "


class ProgramSyntaxError(ProgramError):
    pass


class DuplicateLabel(ProgramError):
    def __init__(self, label: str, line: int | None = None, col: int | None = None):
        super().__init__(f"duplicate rule label {label!r}", line, col)
        self.label = label


class LabelAtomClash(ProgramError):
    def __init__(self, name: str, line: int | None = None, col: int | None = None):
        super().__init__(f"rule label {name!r} is also an atom name", line, col)
        self.name = name


class EmptyChoiceHead(ProgramError):
    def __init__(self, label: str, line: int | None = None, col: int | None = None):
        super().__init__(f"causal-choice rule {label!r} has an empty head", line, col)
        self.label = label


class ProgramErrors(CausticError):
    """Raised when parsing or validation finds one or more problems."""

    def __init__(self, errors: list[ProgramError]):
        super().__init__("\n".join(e.location() + e.message for e in errors))
        self.errors = list(errors)


class NotAChoiceRule(CausticError):
    pass


class TooLarge(CausticError):
    """A brute-force enumeration would exceed its configured bound."""

    def __init__(self, bound: str, size: int, limit: int):
        super().__init__(f"{bound} = {size} exceeds the configured limit {limit}")
        self.bound = bound
        self.size = size
        self.limit = limit


class IterationBound(CausticError):
    pass


class AtomFalse(CausticError):
    def __init__(self, atom: str):
        super().__init__(f"atom {atom!r} is false: no justification")
        self.atom = atom
