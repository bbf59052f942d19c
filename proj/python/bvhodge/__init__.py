"""Hodge numbers of Borcea-Voisin threefolds (S x E)/C_n for n in {2, 3, 4, 6}."""

import json as _json

from ._core import (
    ConsistencyError,
    Error,
    ParseError,
    ValidationError,
    aas_relations_order4,
    classic_bv,
    corollary_order6,
    cy_euler_relation,
    elliptic_orbits,
    emit_text,
    euler_formula,
    euler_pairsum,
    hodge_diamond,
    hodge_order2,
    hodge_order3,
    run_json,
    sector_diamond,
)


def _text(config):
    return config if isinstance(config, str) else _json.dumps(config)


def run(config, checks=True):
    """Run a configuration (dict or JSON text) and return the report as a dict."""
    return _json.loads(run_json(_text(config), checks))


def diamond(config):
    """Orbifold Hodge diamond as a 4x4 list, indexed [p][q]."""
    return hodge_diamond(_text(config))


def euler(config):
    """Pair-sum orbifold Euler characteristic."""
    return euler_pairsum(_text(config))


def report_text(config, checks=True):
    return emit_text(_text(config), checks)


__all__ = [
    "ConsistencyError",
    "Error",
    "ParseError",
    "ValidationError",
    "aas_relations_order4",
    "classic_bv",
    "corollary_order6",
    "cy_euler_relation",
    "diamond",
    "elliptic_orbits",
    "euler",
    "euler_formula",
    "hodge_order2",
    "hodge_order3",
    "report_text",
    "run",
    "sector_diamond",
]
