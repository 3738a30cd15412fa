"""Product-one invariants (d, D, eta) of small finite groups."""

import json

from . import _zsum
from ._zsum import ZsumError, __version__, is_atom, is_product_one_free, pi_set

__all__ = [
    "ZsumError",
    "__version__",
    "group_info",
    "invariant",
    "is_atom",
    "is_product_one_free",
    "pi_set",
    "verify",
    "witness",
]


def group_info(spec):
    return json.loads(_zsum.group_info(spec))


def invariant(which, spec, max_nodes=0, seconds=0.0, use_automorphisms=True):
    """Compute d, D or eta. A zero budget means unlimited."""
    return json.loads(_zsum.invariant(which, spec, max_nodes, seconds, use_automorphisms))


def verify(spec, max_nodes=0, seconds=0.0):
    return json.loads(_zsum.verify(spec, max_nodes, seconds))


def witness(kind, *params):
    return json.loads(_zsum.witness(kind, list(params)))
