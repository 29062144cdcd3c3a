"""Semantics: reducts, standard and causal stable models."""

from caustic.engine.causal import (
    Selection,
    causal_stable_models,
    causal_stable_models_choice,
    causal_stable_models_positive,
    least_causal_model,
    minimal_elements,
    select,
    selections,
    solve,
)
from caustic.engine.config import EngineConfig
from caustic.engine.interpretation import (
    Interpretation,
    eval_body,
    interp_leq,
    interp_sqleq,
    interp_sqless,
    is_model,
    satisfies_rule,
    standardize,
)
from caustic.engine.reduct import choice_program, gl_reduct
from caustic.engine.standard import atom_set_key, closed_candidates, is_closed, standard_stable_models

__all__ = [
    "EngineConfig", "Interpretation", "Selection", "atom_set_key", "causal_stable_models",
    "causal_stable_models_choice", "causal_stable_models_positive", "choice_program",
    "closed_candidates", "eval_body", "gl_reduct", "interp_leq", "interp_sqleq", "interp_sqless",
    "is_closed", "is_model", "least_causal_model", "minimal_elements", "satisfies_rule", "select",
    "selections", "solve", "standard_stable_models", "standardize",
]
