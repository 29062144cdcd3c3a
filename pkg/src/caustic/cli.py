"""Command line: ``caustic solve FILE [options]``.

Exit status is 0 when at least one model exists, 1 when the program has no
models, and 2 on usage, parse or bound errors.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass, field

from caustic.algebra.render import RenderOptions, format_value, options_for
from caustic.engine import EngineConfig, causal_stable_models, standard_stable_models
from caustic.errors import AtomFalse, CausticError, ProgramErrors, TooLarge
from caustic.export import export_dot, export_json, stripped
from caustic.syntax import parse_program


@dataclass(frozen=True)
class SolveConfig:
    mode: str = "causal"
    format: str = "text"
    explain_atoms: tuple[str, ...] = ()
    all_atoms: bool = False
    omit_normal_heads: bool = False
    strip_atom_edges: bool = False
    engine: EngineConfig = field(default_factory=EngineConfig)

    def __post_init__(self):
        if self.mode not in ("standard", "causal"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.format not in ("text", "json", "dot"):
            raise ValueError(f"unknown format {self.format!r}")
        if self.format == "dot" and not (self.explain_atoms or self.all_atoms):
            raise ValueError("--format dot needs --explain ATOM or --all")
        if self.format == "dot" and self.mode == "standard":
            raise ValueError("--format dot needs --mode causal")


def _causal_text(models, program, cfg: SolveConfig, opts: RenderOptions) -> str:
    lines = []
    for n, m in enumerate(models, start=1):
        lines.append(f"Answer {n}: {' '.join(sorted(m.atoms))}")
        shown = cfg.explain_atoms or sorted(m.atoms)
        for a in shown:
            v = m[a]
            if cfg.strip_atom_edges:
                v = stripped(v, program.atoms)
            lines.append(f"{a} = {format_value(v, opts)}")
    return "".join(line + "\n" for line in lines)


def _dot(models, cfg: SolveConfig, opts: RenderOptions, err: list[str]) -> str:
    chunks = []
    for n, m in enumerate(models, start=1):
        chunks.append(f"// model {n}\n")
        for a in cfg.explain_atoms or sorted(m.atoms):
            try:
                chunks.append(export_dot(m, a, opts, strip=cfg.strip_atom_edges))
            except AtomFalse:
                err.append(f"model {n}: atom {a!r} is false, no justification")
    return "".join(chunks)


def run_solve(path: str, cfg: SolveConfig) -> tuple[int, str, str]:
    """Solve the program in ``path``; returns (exit code, stdout text, stderr text)."""
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        return 2, "", f"error: cannot read {path}: {exc.strerror}\n"
    try:
        program = parse_program(text)
    except ProgramErrors as exc:
        return 2, "", "".join(f"{path}:{e.location()}{e.message}\n" for e in exc.errors)
    opts = options_for(program.atoms, program.normal_labels, cfg.omit_normal_heads)
    err: list[str] = []
    try:
        if cfg.mode == "standard":
            sets = standard_stable_models(program, cfg.engine)
            if cfg.format == "json":
                out = export_json(sets, "standard")
            else:
                out = "".join(" ".join(sorted(s)) + "\n" for s in sets)
            count = len(sets)
        else:
            models = causal_stable_models(program, cfg.engine)
            if cfg.format == "json":
                out = export_json(models, "causal", program.atoms, opts)
            elif cfg.format == "dot":
                out = _dot(models, cfg, opts, err)
            else:
                out = _causal_text(models, program, cfg, opts)
            count = len(models)
    except TooLarge as exc:
        return 2, "", f"error: problem too large: {exc}\n"
    except CausticError as exc:
        return 2, "", f"error: {exc}\n"
    if count == 0:
        err.append("no models")
    return (0 if count else 1), out, "".join(e + "\n" for e in err)


def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="caustic", description="Causal stable models of labelled disjunctive logic programs.")
    sub = parser.add_subparsers(dest="command", required=True)
    s = sub.add_parser("solve", help="compute standard or causal stable models")
    s.add_argument("file", help="program text file")
    s.add_argument("--mode", choices=["standard", "causal"], default="causal",
                   help="atom sets only, or causal values too (default: causal)")
    s.add_argument("--format", choices=["text", "json", "dot"], default="text")
    s.add_argument("--explain", action="append", default=[], metavar="ATOM",
                   help="only show these atoms (repeatable)")
    s.add_argument("--all", action="store_true", help="explain every true atom (dot output)")
    s.add_argument("--omit-normal-heads", action="store_true",
                   help="leave out the head atom after normal rules and facts")
    s.add_argument("--strip-atom-edges", action="store_true",
                   help="drop every edge touching an atom label before display")
    default_atoms = os.environ.get("CAUSTIC_MAX_ATOMS")
    s.add_argument("--max-atoms", type=_positive,
                   default=_positive(default_atoms) if default_atoms else EngineConfig.max_atoms,
                   help="refuse programs with more atoms (env CAUSTIC_MAX_ATOMS)")
    s.add_argument("--max-selections", type=_positive, default=EngineConfig.max_selections,
                   help="refuse reducts with more disjunctive rules")
    s.add_argument("--max-choices", type=_positive, default=EngineConfig.max_choices,
                   help="refuse programs with more causal-choice rules")
    s.add_argument("--jobs", type=_positive, default=1, help="worker processes")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = SolveConfig(
            mode=args.mode, format=args.format, explain_atoms=tuple(args.explain),
            all_atoms=args.all, omit_normal_heads=args.omit_normal_heads,
            strip_atom_edges=args.strip_atom_edges,
            engine=EngineConfig(max_atoms=args.max_atoms, max_selections=args.max_selections,
                                max_choices=args.max_choices, jobs=args.jobs),
        )
    except ValueError as exc:
        parser.error(str(exc))
    code, out, err = run_solve(args.file, cfg)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
