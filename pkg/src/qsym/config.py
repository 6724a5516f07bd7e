"""Configurable size guards.

All caps can be overridden through environment variables so that the command
line tools stay usable on small machines; library callers may also pass
explicit limits where an operation takes one.
"""

import os

from .errors import SizeGuardError

#: Largest group order accepted for dense matrix work (QSYM_MAX_N).
DEFAULT_MAX_N = 4096
#: Largest number of entries a dense enumeration may touch (QSYM_MAX_DENSE).
DEFAULT_MAX_DENSE = 10**6
#: Largest number of stored nonzeros in a sparse tensor (QSYM_MAX_SPARSE).
DEFAULT_MAX_SPARSE = 10**7


def max_n():
    return int(os.environ.get("QSYM_MAX_N", DEFAULT_MAX_N))


def max_dense():
    return int(os.environ.get("QSYM_MAX_DENSE", DEFAULT_MAX_DENSE))


def max_sparse():
    return int(os.environ.get("QSYM_MAX_SPARSE", DEFAULT_MAX_SPARSE))


def guard_dense(count, what):
    if count > max_dense():
        raise SizeGuardError(
            f"{what} needs {count} dense entries, over the cap {max_dense()} "
            f"(raise QSYM_MAX_DENSE to override)"
        )


def guard_sparse(count, what):
    if count > max_sparse():
        raise SizeGuardError(
            f"{what} needs {count} stored entries, over the cap {max_sparse()} "
            f"(raise QSYM_MAX_SPARSE to override)"
        )


def guard_n(n, what):
    if n > max_n():
        raise SizeGuardError(
            f"{what} needs a space of dimension {n}, over the cap {max_n()} "
            f"(raise QSYM_MAX_N to override)"
        )
