"""Explicit Galois-module constructions over small finite groups.

Thin wrapper over the C++ core. Reports are the same JSON documents the
``galstruct`` command line tool writes.
"""

import json
import os

from ._galstruct import (
    EXIT_CONFIG,
    EXIT_FAIL,
    EXIT_PASS,
    EXIT_UNKNOWN,
    ConfigError,
    GalstructError,
    cohomology_orders,
    compute_n,
    compute_n_prime,
)
from . import _galstruct

__all__ = [
    "ConfigError",
    "GalstructError",
    "EXIT_PASS",
    "EXIT_CONFIG",
    "EXIT_UNKNOWN",
    "EXIT_FAIL",
    "catalog",
    "cohomology_orders",
    "compute_n",
    "compute_n_prime",
    "relation_module",
    "run_scenario",
    "run_scenario_text",
    "schanuel",
]


def run_scenario_text(config, seed=None):
    """Run a scenario and return (report text, exit code).

    ``config`` is a dict, a JSON string or a path to a scenario file.
    """
    if isinstance(config, dict):
        text = json.dumps(config)
    elif isinstance(config, (str, os.PathLike)) and os.path.exists(config):
        with open(config) as f:
            text = f.read()
    else:
        text = config
    return _galstruct._run_json(text, seed)


def run_scenario(config, seed=None):
    """Run a scenario and return (report dict, exit code)."""
    text, code = run_scenario_text(config, seed)
    return json.loads(text), code


def catalog():
    """Catalog groups as dicts with name, order and minimal generator count d."""
    return json.loads(_galstruct._catalog_json())


def relation_module(group, generators):
    """Rank, m = |G|-1-d and sequence checks for the relation module of a generating set."""
    return json.loads(_galstruct._relation_module_json(group, list(generators)))


def schanuel(group, gens_a, gens_b):
    """Compare relation modules of two generating sets after free padding."""
    return json.loads(_galstruct._schanuel_json(group, list(gens_a), list(gens_b)))
