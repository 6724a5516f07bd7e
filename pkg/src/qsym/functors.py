"""Concrete tensor realizations of partition diagrams.

``functor_T`` sends a partition p with k upper and l lower points to the
blockwise Kronecker delta acting (C^N)^(x k) -> (C^N)^(x l): an entry is 1
exactly when the indices inside every block agree.  Composition then matches
diagram composition with a factor N per closed loop, which is the master
oracle used throughout the test-suite.

``functor_T_deformed`` attaches the sign sigma_i * sigma_j that counts index
inversions on either row; it is defined for partitions whose blocks all have
even size.

The antisymmetrizer projections (signed, and the sign-free variant that kills
repeated indices) are built here together with their coisometry
factorizations, which certify their rank exactly.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import comb, factorial

from .config import guard_sparse
from .errors import InvalidInputError
from .partitions import Partition, PartLin
from .sparse import SparseTensor


def functor_T(p: Partition, N: int) -> SparseTensor:
    """Blockwise Kronecker delta of p on index set {0..N-1}."""
    if N < 1:
        raise InvalidInputError(f"functor needs N >= 1, got {N}")
    nb = p.n_blocks
    guard_sparse(N**nb, f"functor tensor for {p} at N={N}")
    k, l = p.k, p.l
    assign = p.assign
    entries = {}
    for values in itertools.product(range(N), repeat=nb):
        point_vals = tuple(values[b] for b in assign)
        idx = point_vals[k:] + point_vals[:k]  # outputs (lower) first
        entries[idx] = 1
    return SparseTensor((N,) * (l + k), l, entries)


def sign_sigma(indices) -> int:
    """-1 when the number of strict inversions is odd, else +1 (ties ignored)."""
    indices = tuple(indices)
    inv = 0
    for a in range(len(indices)):
        for b in range(a + 1, len(indices)):
            if indices[a] > indices[b]:
                inv += 1
    return -1 if inv % 2 else 1


def functor_T_deformed(p: Partition, N: int) -> SparseTensor:
    """Signed functor sigma_i sigma_j [T_p]; needs all blocks of even size."""
    if p.has_odd_block():
        raise InvalidInputError(
            f"deformed functor needs even block sizes, got {p}"
        )
    base = functor_T(p, N)
    l = p.l
    entries = {}
    for idx, v in base.entries.items():
        out, inn = idx[:l], idx[l:]
        s = sign_sigma(inn) * sign_sigma(out)
        entries[idx] = v if s == 1 else -v
    return SparseTensor(base.shape, l, entries)


def evaluate_partlin(e: PartLin, N: int, deformed: bool = False) -> SparseTensor:
    """Evaluate a formal combination at loop parameter n := N."""
    e = PartLin.coerce(e)
    out = SparseTensor.zeros((N,) * (e.l + e.k), e.l)
    for part, coeff in e.terms.items():
        t = functor_T_deformed(part, N) if deformed else functor_T(part, N)
        out = out + t.scale(coeff(N))
    return out


# -- fast exact zero test for (undeformed) evaluations -------------------------

def _coarsenings(blocks):
    """All ways to merge a list of blocks (set partitions of the block list)."""
    if not blocks:
        yield []
        return
    first, rest = blocks[0], blocks[1:]
    for sub in _coarsenings(rest):
        for i in range(len(sub)):
            yield sub[:i] + [sub[i] | first] + sub[i + 1:]
        yield [set(first)] + sub


def _refines(p: Partition, kernel_assign) -> bool:
    seen = {}
    for pos, b in enumerate(p.assign):
        kb = kernel_assign[pos]
        if b in seen:
            if seen[b] != kb:
                return False
        else:
            seen[b] = kb
    return True


def partlin_evaluates_to_zero(e: PartLin, N: int) -> bool:
    """Exact test that the undeformed evaluation of e at N is the zero tensor.

    The entry of T_p at an index tuple x depends only on the kernel of x (the
    set partition of positions by equal values): it is 1 iff p refines that
    kernel.  It therefore suffices to check, for every kernel K with at most N
    parts that coarsens some term of e, that the coefficients of the refining
    terms sum to zero.  This avoids materializing N^points entries.
    """
    e = PartLin.coerce(e)
    npts = e.k + e.l
    kernels = {}
    for part in e.terms:
        blocks = [set(b) for b in part.blocks()]
        for merged in _coarsenings(blocks):
            assign = [0] * npts
            for bid, blk in enumerate(merged):
                for pos in blk:
                    assign[pos] = bid
            key = Partition(e.k, e.l, assign)
            kernels[key] = None
    for kernel in kernels:
        if kernel.n_blocks > N:
            continue
        total = Fraction(0)
        for part, coeff in e.terms.items():
            if _refines(part, kernel.assign):
                total += coeff(N)
        if total:
            return False
    return True


def partlin_tensors_equal(lhs: PartLin, rhs: PartLin, N: int) -> bool:
    """Exact equality of the (undeformed) tensor evaluations at N."""
    lhs, rhs = PartLin.coerce(lhs), PartLin.coerce(rhs)
    lhs._check_shape(rhs)
    return partlin_evaluates_to_zero(lhs - rhs, N)


# -- antisymmetrizers -----------------------------------------------------------

def _perm_sign(perm) -> int:
    perm = list(perm)
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, clen = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            clen += 1
        if clen % 2 == 0:
            sign = -sign
    return sign


def antisymmetrizer(k: int, n: int, deformed: bool = False) -> SparseTensor:
    """The projection of (C^n)^(x k) onto the k-th (anticommutative) exterior
    power: signed symmetrization, or sign-free symmetrization supported on
    distinct-index tuples when ``deformed``."""
    if k < 0 or n < 1:
        raise InvalidInputError(f"antisymmetrizer needs k >= 0, n >= 1")
    if k == 0:
        return SparseTensor((), 0, {(): 1})
    guard_sparse(comb(n, k) * factorial(k) ** 2, f"antisymmetrizer k={k}, n={n}")
    kfact = factorial(k)
    inv = Fraction(1, kfact)
    entries = {}
    for subset in itertools.combinations(range(n), k):
        arrangements = list(itertools.permutations(subset))
        for out in arrangements:
            for inn in arrangements:
                if deformed:
                    entries[out + inn] = inv
                else:
                    rel = _relative_sign(inn, out)
                    entries[out + inn] = inv * rel
    return SparseTensor((n,) * (2 * k), k, entries)


def _relative_sign(src, dst) -> int:
    """Sign of the permutation mapping the distinct tuple src onto dst."""
    pos = {v: i for i, v in enumerate(src)}
    return _perm_sign([pos[v] for v in dst])


def antisym_coisometry(k: int, n: int, deformed: bool = False) -> SparseTensor:
    """W with one output leg indexed by increasing k-tuples: A = k! W* W and
    W W* = (1/k!) I, which together certify rank(A) = C(n, k)."""
    if k == 0:
        return SparseTensor((1,), 1, {(0,): 1})
    subsets = list(itertools.combinations(range(n), k))
    inv = Fraction(1, factorial(k))
    entries = {}
    for r, subset in enumerate(subsets):
        for arr in itertools.permutations(subset):
            val = inv if deformed else inv * _relative_sign(arr, subset)
            entries[(r,) + arr] = val
    return SparseTensor((len(subsets),) + (n,) * k, 1, entries)


def permanent_direct(rows) -> Fraction:
    """Reference permanent via the defining sum over permutations."""
    n = len(rows)
    total = Fraction(0)
    for perm in itertools.permutations(range(n)):
        prod = Fraction(1)
        for a in range(n):
            prod *= Fraction(rows[a][perm[a]])
            if not prod:
                break
        total += prod
    return total


def permanent_via_wedge(rows) -> Fraction:
    """Permanent through the top anticommutative exterior power.

    W M^(x n) W* is 1x1 since the n-th power is one-dimensional; with the
    normalization W W* = (1/n!) I the permanent equals n! squared times that
    single entry divided by n!, i.e. n! * (W M^(x n) W*)[0,0].
    """
    n = len(rows)
    if n > 6:
        raise InvalidInputError("permanent_via_wedge is guarded to n <= 6")
    if any(len(r) != n for r in rows):
        raise InvalidInputError("matrix must be square")
    M = [[Fraction(v) for v in r] for r in rows]
    inv2 = Fraction(1, factorial(n) ** 2)
    total = Fraction(0)
    for sigma in itertools.permutations(range(n)):
        for pi in itertools.permutations(range(n)):
            prod = Fraction(1)
            for a in range(n):
                prod *= M[sigma[a]][pi[a]]
                if not prod:
                    break
            total += prod
    return factorial(n) * inv2 * total


def random_partition(rng, k: int, l: int) -> Partition:
    """Uniformly random block structure via sequential block assignment."""
    assign = [0]
    for _ in range(k + l - 1):
        assign.append(rng.randint(0, max(assign) + 1))
    return Partition(k, l, assign)
