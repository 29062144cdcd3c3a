"""Causal stable models.

Positive programs
-----------------
A model ``J`` of a positive program satisfies every rule through some head
atom; fixing one such atom per disjunctive rule (a *selection*) yields a
normal program ``P_sel`` of which ``J`` is also a model, so the least model
``lfp(P_sel)`` lies pointwise below ``J``.  Conversely every ``lfp(P_sel)``
that passes the constraints is a model of ``P``.  Hence the weakly-minimal
models of ``P`` are exactly the weakly-minimal elements of the finite pool
``{lfp(P_sel)}``, which is what :func:`causal_stable_models_positive`
enumerates.  Minimality is checked as "no other candidate is strictly
below", which does not rely on transitivity of the weak order.

Programs with negation
----------------------
An interpretation ``I`` is causal stable for ``P`` when it is causal stable
for the reduct ``P^I``, which depends only on the true atoms of ``I``.  For
each candidate atom set ``S`` we solve the reduct ``P^S`` and keep the models
whose true atoms are exactly ``S``.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import replace

from caustic.algebra.values import ZERO, CausalValue, value_apply, value_sum_all
from caustic.engine.config import DEFAULT, EngineConfig
from caustic.engine.interpretation import Interpretation, eval_body, interp_sqless, satisfies_rule
from caustic.engine.reduct import choice_program, gl_reduct
from caustic.engine.standard import closed_candidates, standard_stable_models
from caustic.errors import IterationBound, TooLarge
from caustic.syntax.program import Program, Rule

Selection = dict[int, str]
"""Rule index -> the head atom chosen for that disjunctive rule."""


def _suffix(r: Rule, atom: str) -> CausalValue:
    return value_apply(CausalValue.label(r.label), CausalValue.label(atom))


def least_causal_model(p: Program, config: EngineConfig = DEFAULT) -> Interpretation:
    """Least model of a positive normal program, by fixpoint iteration from the bottom.

    Constraints are ignored here; callers check them.
    """
    steps = []
    for r in p.rules:
        if r.is_constraint:
            continue
        if len(r.pos_head) != 1 or not r.is_positive or r.is_choice:
            raise ValueError(f"rule {r.label!r} is not a positive normal rule")
        steps.append((r, r.pos_head[0], _suffix(r, r.pos_head[0])))

    current = Interpretation()
    for _ in range(config.max_iterations):
        derived: dict[str, list[CausalValue]] = {}
        for r, head, suffix in steps:
            body = eval_body(current, r)
            if body.graphs:
                derived.setdefault(head, []).append(value_apply(body, suffix))
        nxt = Interpretation({a: value_sum_all(vs) for a, vs in derived.items()})
        if nxt == current:
            return current
        current = nxt
    raise IterationBound(f"no fixpoint after {config.max_iterations} iterations")


def selections(p: Program, config: EngineConfig = DEFAULT) -> Iterable[Selection]:
    disjunctive = [i for i, r in enumerate(p.rules) if len(r.pos_head) > 1]
    if len(disjunctive) > config.max_selections:
        raise TooLarge("max_selections", len(disjunctive), config.max_selections)
    heads = [p.rules[i].pos_head for i in disjunctive]
    for choice in itertools.product(*heads):
        yield dict(zip(disjunctive, choice))


def select(p: Program, sel: Selection) -> Program:
    """The normal program keeping only the selected head atom of each disjunctive rule."""
    rules = tuple(replace(r, pos_head=(sel[i],)) if i in sel else r for i, r in enumerate(p.rules))
    return Program(rules, p.shared_labels)


def minimal_elements(pool: Iterable[Interpretation]) -> list[Interpretation]:
    """Candidates with no other candidate strictly below them in the weak order."""
    unique = sorted(set(pool), key=lambda i: i.sort_key)
    return [c for c in unique if not any(interp_sqless(d, c) for d in unique if d is not c)]


def causal_stable_models_positive(p: Program, config: EngineConfig = DEFAULT) -> list[Interpretation]:
    if not all(r.is_positive and not r.is_choice for r in p.rules):
        raise ValueError("causal_stable_models_positive needs a positive, choice-free program")
    constraints = [r for r in p.rules if r.is_constraint]
    pool = set()
    for sel in selections(p, config):
        candidate = least_causal_model(select(p, sel), config)
        if all(not eval_body(candidate, c).graphs for c in constraints):
            pool.add(candidate)
    return minimal_elements(pool)


def _models_for(p: Program, s: frozenset[str], config: EngineConfig) -> list[Interpretation]:
    return [i for i in causal_stable_models_positive(gl_reduct(p, s), config) if i.atoms == s]


def _solve_per_set(p: Program, sets: list[frozenset[str]], config: EngineConfig) -> list[Interpretation]:
    if config.jobs > 1 and len(sets) > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            chunks = list(pool.map(_models_for, itertools.repeat(p), sets, itertools.repeat(config)))
    else:
        chunks = [_models_for(p, s, config) for s in sets]
    models = {i for chunk in chunks for i in chunk}
    return sorted(models, key=lambda i: i.sort_key)


def causal_stable_models(p: Program, config: EngineConfig = DEFAULT,
                         reduct_sets: str = "stable") -> list[Interpretation]:
    """All causal stable models of ``p``, sorted canonically.

    ``reduct_sets`` picks the atom sets whose reducts are solved: ``"stable"``
    (the GL-stable models, the normal route) or ``"closed"`` (every set closed
    under its own reduct; slower, used to cross-check the correspondence
    between causal and standard stable models).
    """
    if p.has_choice:
        return causal_stable_models_choice(p, config, reduct_sets)
    if reduct_sets == "stable":
        sets = standard_stable_models(p, config)
    elif reduct_sets == "closed":
        sets = list(closed_candidates(p, config))
    else:
        raise ValueError(f"unknown reduct_sets {reduct_sets!r}")
    return _solve_per_set(p, sets, config)


def causal_stable_models_choice(p: Program, config: EngineConfig = DEFAULT,
                                reduct_sets: str = "stable") -> list[Interpretation]:
    """Causal stable models of a program with causal-choice rules.

    For each subset ``C`` of the choice rules, solve the program where exactly
    the rules in ``C`` are read as ordinary rules, and keep the models that
    satisfy precisely the choice rules in ``C``.
    """
    choice_idx = [i for i, r in enumerate(p.rules) if r.is_choice]
    if len(choice_idx) > config.max_choices:
        raise TooLarge("max_choices", len(choice_idx), config.max_choices)
    found = set()
    for n in range(len(choice_idx) + 1):
        for chosen in itertools.combinations(choice_idx, n):
            sub = choice_program(p, set(chosen))
            for i in causal_stable_models(sub, config, reduct_sets):
                if all((k in chosen) == satisfies_rule(i, p.rules[k].as_regular()) for k in choice_idx):
                    found.add(i)
    return sorted(found, key=lambda i: i.sort_key)


def solve(p: Program, config: EngineConfig = DEFAULT) -> list[Interpretation]:
    """Entry point: causal stable models of any program."""
    return causal_stable_models(p, config)
