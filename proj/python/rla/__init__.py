"""Restricted Lie algebras over finite fields.

Vectors are lists of coordinates. Over GF(p^k) with k > 1 each coordinate is
the packed code sum(r_i * p**i) of its residues r_i.
"""

import json

from ._rla import (
    DEFAULT_BUDGET,
    SCHEMA_VERSION,
    Algebra,
    Error,
    family_names,
    generate,
    jordan_chevalley,
    lattice_dot,
)
from . import _rla

__all__ = [
    "DEFAULT_BUDGET",
    "SCHEMA_VERSION",
    "Algebra",
    "Error",
    "check",
    "default_corpus_config",
    "family_names",
    "generate",
    "jordan_chevalley",
    "lattice",
    "lattice_dot",
    "run_corpus",
    "structure",
    "theorem_catalog",
    "validate",
]


def validate(algebra):
    """Validation report; ``report["validation"]["ok"]`` is the verdict."""
    return json.loads(_rla._validate(algebra))


def structure(algebra, budget=DEFAULT_BUDGET):
    return json.loads(_rla._structure(algebra, budget))


def lattice(algebra, mode="restricted", budget=DEFAULT_BUDGET):
    """Nodes, covers, flags and the predicate table with witnesses."""
    return json.loads(_rla._lattice(algebra, mode, budget))


def check(algebra, theorem, budget=DEFAULT_BUDGET):
    return json.loads(_rla._check(algebra, theorem, budget))


def theorem_catalog():
    return json.loads(_rla._theorem_catalog())


def default_corpus_config():
    return json.loads(_rla._default_corpus_config())


def run_corpus(config=None):
    """Aggregate report. Missing keys in ``config`` mean empty lists."""
    if config is None:
        config = default_corpus_config()
    return json.loads(_rla._run_corpus(json.dumps(config)))
