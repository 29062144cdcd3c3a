"""Brute-force standard (GL) stable models over bitmask-encoded programs."""

from __future__ import annotations

from collections.abc import Iterator

from caustic.engine.config import DEFAULT, EngineConfig
from caustic.errors import TooLarge
from caustic.syntax.program import Program


def atom_set_key(s: frozenset[str]) -> tuple:
    return (len(s), tuple(sorted(s)))


class _Encoded:
    """Rules as (head+, head-, body+, body-, is_choice) bitmasks over a fixed atom order."""

    def __init__(self, p: Program, config: EngineConfig):
        self.atoms = sorted(p.atoms)
        if len(self.atoms) > config.max_atoms:
            raise TooLarge("max_atoms", len(self.atoms), config.max_atoms)
        index = {a: i for i, a in enumerate(self.atoms)}

        def mask(names) -> int:
            m = 0
            for n in names:
                m |= 1 << index[n]
            return m

        self.rules = [(mask(r.pos_head), mask(r.neg_head), mask(r.pos_body), mask(r.neg_body),
                       r.is_choice) for r in p.rules]

    def decode(self, s: int) -> frozenset[str]:
        return frozenset(a for i, a in enumerate(self.atoms) if s >> i & 1)

    def reduct(self, s: int) -> list[tuple[int, int]]:
        """Positive rules (head+, body+) of the reduct w.r.t. ``s``.

        Choice rules survive only when ``s`` classically satisfies their
        ordinary form.
        """
        out = []
        for hp, hn, bp, bn, choice in self.rules:
            if choice:
                body_true = bp & s == bp and not bn & s
                if body_true and not hp & s and hn & s == hn:
                    continue
            if bn & s or hn & s != hn:
                continue
            out.append((hp, bp))
        return out

    @staticmethod
    def closed(t: int, positive: list[tuple[int, int]]) -> bool:
        return all(hp & t or bp & t != bp for hp, bp in positive)

    def is_stable(self, s: int) -> bool:
        positive = self.reduct(s)
        if not self.closed(s, positive):
            return False
        t = s
        while t:
            t = (t - 1) & s
            if self.closed(t, positive):
                return False
        return True


def standard_stable_models(p: Program, config: EngineConfig = DEFAULT) -> list[frozenset[str]]:
    """All GL-stable models: sets ``S`` that are subset-minimal closed sets of the reduct ``P^S``.

    Causal-choice rules are handled through their reduct: a choice rule is kept
    (as an ordinary rule) exactly when ``S`` satisfies it.
    """
    enc = _Encoded(p, config)
    found = [enc.decode(s) for s in range(1 << len(enc.atoms)) if enc.is_stable(s)]
    return sorted(found, key=atom_set_key)


def closed_candidates(p: Program, config: EngineConfig = DEFAULT) -> Iterator[frozenset[str]]:
    """Every ``S`` closed under its own reduct (a necessary condition for any model).

    Used to cross-check the causal engine without assuming that only GL-stable
    sets can carry causal stable models.
    """
    enc = _Encoded(p, config)
    for s in range(1 << len(enc.atoms)):
        if enc.closed(s, enc.reduct(s)):
            yield enc.decode(s)


def is_closed(s: frozenset[str], p: Program) -> bool:
    """Whether ``s`` is closed under ``p`` (negation evaluated against ``s`` itself)."""
    for r in p.rules:
        if set(r.pos_body) | set(r.neg_head) <= s and not s.intersection(r.neg_body):
            if not s.intersection(r.pos_head):
                return False
    return True
