"""Causal stable models and justifications for labelled disjunctive logic programs."""

__version__ = "0.1.0"
