"""Program syntax: AST, parser, printer, validation and the choice rewriting."""

from caustic.syntax.parser import parse_program
from caustic.syntax.printer import print_program, print_rule
from caustic.syntax.program import CHOICE, REGULAR, Program, Rule, fact
from caustic.syntax.transform import rchoice_all, rchoice_transform
from caustic.syntax.validate import check_program, validate_program

__all__ = [
    "CHOICE", "REGULAR", "Program", "Rule", "check_program", "fact", "parse_program",
    "print_program", "print_rule", "rchoice_all", "rchoice_transform", "validate_program",
]
