"""Fusion systems, normalizers and decomposition diagrams for unitary groups."""

import json

from . import _core
from ._core import CapExceeded, GroupError, builtin_groups

__all__ = [
    "CapExceeded",
    "GroupError",
    "aut_gamma",
    "builtin_groups",
    "decompose",
    "dump_group",
    "fusion",
    "verify",
]


def verify(case="sup", prime=3, level=1, index=None, cap=2_000_000):
    """Run every suite for one case and return the report as a dict."""
    return json.loads(_core.verify_json(case, prime, level, index, cap))


def decompose(case="sup", prime=3, level=1, index=None, format="json", collapsed=True):
    """Decomposition diagram; a dict for json, otherwise the DOT or text source."""
    out = _core.decompose(case, prime, level, index, format, collapsed)
    return json.loads(out) if format == "json" else out


def aut_gamma(prime):
    return _core.aut_gamma(prime)


def fusion(table, prime=None):
    """Chain poset of a group given as a table dict {order, mult, labels, prime}."""
    if not isinstance(table, str):
        table = json.dumps(table)
    return json.loads(_core.fusion_json(table, prime))


def dump_group(name):
    return json.loads(_core.dump_group(name))
