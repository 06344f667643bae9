"""Semigroup primes of finite commutative rings.

Inputs are the same JSON objects the ``specprime`` command line tool reads,
passed as plain dicts::

    >>> import specprime
    >>> specprime.sprimes({"kind": "zmod", "n": 6})
    [[0, 3], [0, 2, 4], [0, 2, 3, 4]]
"""

import json

from . import _core
from ._core import (
    DEFAULT_BRUTEFORCE_CAP,
    DEFAULT_SEED,
    Error,
    InvalidParameter,
    InvalidSemigroup,
    InvariantViolation,
    NotAHomomorphism,
    NotAPartialOrder,
    NotSpectral,
    TooLarge,
)

__all__ = [
    "DEFAULT_BRUTEFORCE_CAP",
    "DEFAULT_SEED",
    "Error",
    "InvalidParameter",
    "InvalidSemigroup",
    "InvariantViolation",
    "NotAHomomorphism",
    "NotAPartialOrder",
    "NotSpectral",
    "TooLarge",
    "all_checks",
    "check",
    "dedekind_verdict",
    "default_job",
    "density",
    "dot",
    "element_names",
    "run_job",
    "spec",
    "sprimes",
    "sprimes_bruteforce",
    "surjectivity",
    "xspace",
]


def _dump(obj):
    return json.dumps(obj)


def all_checks():
    """Names accepted in a job's ``checks`` list."""
    return list(_core.all_checks())


def check(input, name, bruteforce_cap=DEFAULT_BRUTEFORCE_CAP, seed=DEFAULT_SEED):
    """Run one check on one input and return its report envelope."""
    return json.loads(_core.run_check(_dump(input), name, bruteforce_cap, seed))


def run_job(job, output=None, write_files=False, bruteforce_cap=DEFAULT_BRUTEFORCE_CAP,
            seed=DEFAULT_SEED, threads=0):
    """Run a job dict. Returns ``{"exit_code", "reports", "files", "errors"}``.

    Reports stay in memory unless ``write_files`` is true.
    """
    text = _core.run_job(_dump(job), output or "", write_files, bruteforce_cap, seed, threads)
    return json.loads(text)


def dot(input, space="sprimes"):
    """Hasse diagram in DOT for ``space`` in spec, sprimes or xspace."""
    return _core.export_dot(space, _dump(input))


def default_job():
    return json.loads(_core.default_job())


def element_names(ring):
    return list(_core.element_names(_dump(ring)))


def spec(ring):
    """Prime ideals as sorted element-index lists."""
    return _core.spec(_dump(ring))


def sprimes(ring):
    """Semigroup primes as unions of prime ideals."""
    return _core.sprimes(_dump(ring))


def sprimes_bruteforce(ring, cap=DEFAULT_BRUTEFORCE_CAP):
    """Semigroup primes by scanning every subset of the multiplicative monoid."""
    return _core.sprimes_bruteforce(_dump(ring), cap)


def xspace(poset):
    """Nonempty down-sets of a poset, as point-index lists."""
    return _core.xspace(_dump(poset))


def surjectivity(ring):
    return json.loads(_core.surjectivity(_dump(ring)))


def density(ring):
    return json.loads(_core.density(_dump(ring)))


def dedekind_verdict(free_rank, torsion=()):
    return _core.dedekind_verdict(free_rank, list(torsion))
