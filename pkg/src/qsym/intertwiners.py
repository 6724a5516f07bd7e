"""Fourier-transformed intertwiners, eigenspace projections, and the Hamming
two-point operator algebra.

For the one-block partition b_{k,l}, conjugating the blockwise delta by the
group Fourier transform gives the exact closed form

    [hat T_{b_{k,l}}]^{nu_1..nu_l}_{mu_1..mu_k} = N^(1-l) * [sum mu = sum nu]

(character orthogonality contributes one factor N, each inverse transform on
an output leg contributes 1/N).  ``project`` restricts such operators to
chosen eigenspace label sets; results are kept unnormalized-but-exact, with
scale factors stated explicitly where identities are asserted.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .cayley import SpectralDecomposition
from .config import guard_sparse
from .cyclotomic import Cyclotomic
from .errors import InvalidInputError
from .groups import AbelianGroup, GroupElement
from .sparse import SparseTensor


class EigenprojectionBasis:
    """An ordered list of character labels spanning selected eigenspaces.

    The coisometry U with rows conj(tau_mu(alpha)) satisfies U U* = N I on the
    selected block; it is kept unnormalized so everything stays in the
    cyclotomic field.
    """

    def __init__(self, group: AbelianGroup, labels):
        self.group = group
        self.labels = tuple(
            mu if isinstance(mu, GroupElement) else group.element(mu) for mu in labels
        )
        if len(set(self.labels)) != len(self.labels):
            raise InvalidInputError("duplicate labels in eigenprojection basis")
        self.scale = group.order  # U U* = scale * identity

    def __len__(self):
        return len(self.labels)

    @classmethod
    def from_spectrum(cls, spec: SpectralDecomposition, indices) -> "EigenprojectionBasis":
        """Select the eigenspaces with the given positions in the canonical
        eigenvalue order (0 = largest)."""
        labels = []
        for i in indices:
            if not 0 <= i < len(spec.items):
                raise InvalidInputError(
                    f"eigenspace index {i} out of range 0..{len(spec.items) - 1}"
                )
            labels.extend(spec.items[i][1])
        return cls(spec.graph.group, labels)

    def u_matrix(self) -> dict:
        """U as {(row, alpha_index): conj(tau_mu(alpha))}."""
        g = self.group
        out = {}
        for r, mu in enumerate(self.labels):
            for alpha in g.elements():
                out[(r, g.index(alpha))] = g.char_value(mu, alpha).conj()
        return out

    def u_star_matrix(self) -> dict:
        """U* as {(alpha_index, row): tau_mu(alpha)}."""
        g = self.group
        out = {}
        for r, mu in enumerate(self.labels):
            for alpha in g.elements():
                out[(g.index(alpha), r)] = g.char_value(mu, alpha)
        return out


def hat_block_intertwiner(group: AbelianGroup, k: int, l: int) -> SparseTensor:
    """Closed form of the Fourier transform of T_{b_{k,l}}, axes indexed by
    the group's fixed character enumeration."""
    if k < 0 or l < 0 or k + l < 1:
        raise InvalidInputError(f"block intertwiner needs k+l >= 1, got ({k},{l})")
    g = group
    N = g.order
    free = max(k + l - 1, 0)
    guard_sparse(N**free, f"hat block intertwiner k={k}, l={l}, N={N}")
    value = Fraction(N) ** (1 - l)
    elems = list(g.elements())
    entries = {}
    if l >= 1:
        # choose inputs and all but the last output freely
        for mus in itertools.product(elems, repeat=k):
            s_in = g.sum(mus)
            for nus in itertools.product(elems, repeat=l - 1):
                last = g.sub(s_in, g.sum(nus)) if nus else s_in
                idx = tuple(g.index(nu) for nu in nus) + (g.index(last),) + tuple(
                    g.index(mu) for mu in mus
                )
                entries[idx] = value
    else:
        for mus in itertools.product(elems, repeat=k):
            if g.sum(mus).is_zero():
                entries[tuple(g.index(mu) for mu in mus)] = value
    return SparseTensor((N,) * (l + k), l, entries)


def brute_hat_intertwiner(group: AbelianGroup, t: SparseTensor) -> SparseTensor:
    """(F^-1)^(x l) . T . F^(x k) by explicit leg-wise contraction; the
    independent oracle for the closed form.

    The contraction runs in the group algebra Q[x]/(x^M - 1): every Fourier
    coefficient is a root of unity, so multiplying by it is an index shift,
    and the single reduction into Q(zeta_M) happens entrywise at the end.
    """
    g = group
    N = g.order
    M = g.exponent
    elems = list(g.elements())
    exp_of = [[g.char_exponent(mu, alpha) for alpha in elems] for mu in elems]
    zero = [0] * M

    def encode(value: Cyclotomic):
        vec = list(zero)
        q = value.as_fraction()
        vec[0] = int(q) if q.denominator == 1 else q
        return vec

    cur = {idx: encode(v) for idx, v in t.entries.items()}
    l, k = t.out_axes, t.in_axes
    for leg in range(l, l + k):  # input legs: multiply by tau_mu(alpha)
        nxt = {}
        for idx, vec in cur.items():
            alpha = idx[leg]
            for mu in range(N):
                e = exp_of[mu][alpha]
                key = idx[:leg] + (mu,) + idx[leg + 1:]
                acc = nxt.get(key)
                if acc is None:
                    acc = list(zero)
                    nxt[key] = acc
                for j, c in enumerate(vec):
                    if c:
                        acc[(j + e) % M] += c
        cur = nxt
    for leg in range(l):  # output legs: multiply by conj tau_nu(beta), scale 1/N
        nxt = {}
        for idx, vec in cur.items():
            beta = idx[leg]
            for nu in range(N):
                e = exp_of[nu][beta]
                key = idx[:leg] + (nu,) + idx[leg + 1:]
                acc = nxt.get(key)
                if acc is None:
                    acc = list(zero)
                    nxt[key] = acc
                for j, c in enumerate(vec):
                    if c:
                        acc[(j - e) % M] += c
        cur = nxt
    scale = Fraction(1, N**l)
    from .cyclotomic import _reduction_rows, euler_phi

    rows = _reduction_rows(M)
    phi = euler_phi(M)
    entries = {}
    for idx, vec in cur.items():
        coeffs = [Fraction(0)] * phi
        for j, c in enumerate(vec):
            if c:
                row = rows[j]
                for i in range(phi):
                    if row[i]:
                        coeffs[i] += c * row[i]
        val = Cyclotomic(M, [c * scale for c in coeffs])
        if not val.is_zero():
            entries[idx] = val
    return SparseTensor(t.shape, t.out_axes, entries)


def project(
    t: SparseTensor,
    basis_out: EigenprojectionBasis | None,
    basis_in: EigenprojectionBasis | None,
) -> SparseTensor:
    """Fourier-conjugate t and restrict legs to selected labels.

    Equals (1/N^l) U_out^(x l) . t . (U_in^*)^(x k), i.e. the exact restriction
    of (F^-1)^(x l) t F^(x k) to the chosen label sets; no other normalization
    is applied.
    """
    group = (basis_in or basis_out).group
    g = group
    N = g.order
    if any(d != N for d in t.shape):
        raise InvalidInputError("tensor legs must all have the group order as dimension")
    out = t
    if t.in_axes:
        if basis_in is None:
            raise InvalidInputError("input legs present but no input basis given")
        ustar = basis_in.u_star_matrix()  # (alpha, row) -> tau_mu(alpha)
        for leg in range(t.in_axes):
            out = out.transform_in_leg(leg, ustar, len(basis_in))
    if t.out_axes:
        if basis_out is None:
            raise InvalidInputError("output legs present but no output basis given")
        u = basis_out.u_matrix()  # (row, beta) -> conj tau
        scale = Fraction(1, N)
        u_scaled = {k: v * scale for k, v in u.items()}
        for leg in range(t.out_axes):
            out = out.transform_out_leg(leg, u_scaled, len(basis_out))
    return out


def check_intertwiner(t: SparseTensor, reps_out, reps_in) -> bool:
    """Exact test of t . (x reps_in) == (x reps_out) . t.

    ``reps_out``/``reps_in`` give one square matrix per corresponding leg.
    """
    reps_out = [_as_tensor(r) for r in reps_out]
    reps_in = [_as_tensor(r) for r in reps_in]
    if len(reps_in) != t.in_axes or len(reps_out) != t.out_axes:
        raise InvalidInputError("one representation matrix needed per leg")
    lhs = t
    for leg, r in enumerate(reps_in):
        if r.shape != (t.shape[t.out_axes + leg],) * 2:
            raise InvalidInputError("input representation has wrong dimension")
        lhs = lhs.transform_in_leg(leg, r.entries, r.shape[1])
    rhs = t
    for leg, r in enumerate(reps_out):
        if r.shape != (t.shape[leg],) * 2:
            raise InvalidInputError("output representation has wrong dimension")
        rhs = rhs.transform_out_leg(leg, r.entries, r.shape[0])
    return lhs == rhs


def _as_tensor(r) -> SparseTensor:
    return r if isinstance(r, SparseTensor) else SparseTensor.from_matrix(r)


# -- Hamming two-point operators -------------------------------------------------------

class HammingOperators:
    """The named restrictions of Fourier-transformed intertwiners to the
    degree-one eigenspace of the Hamming graph H(n, m).

    Labels are pairs (a, i), a in 1..m-1, i in 1..n, flattened to a single
    axis.  All delta formulas are over Z_m (a sum condition written a+b = m
    means a + b = 0 mod m).
    """

    def __init__(self, m: int, n: int, aabb_strict: bool = True):
        if m < 2 or n < 1:
            raise InvalidInputError("Hamming operators need m >= 2, n >= 1")
        self.m, self.n = m, n
        self.dim = (m - 1) * n
        guard_sparse(self.dim**4, f"Hamming operators m={m}, n={n}")
        self.aabb_strict = aabb_strict
        self._labels = [(a, i) for a in range(1, m) for i in range(n)]
        self._index = {lab: x for x, lab in enumerate(self._labels)}

    def idx(self, a: int, i: int) -> int:
        return self._index[(a, i)]

    def labels(self):
        return list(self._labels)

    def _tensor2(self, pred) -> SparseTensor:
        d = self.dim
        entries = {}
        for (a1, i1), (a2, i2) in itertools.product(self._labels, repeat=2):
            for (b1, j1), (b2, j2) in itertools.product(self._labels, repeat=2):
                if pred(a1, i1, a2, i2, b1, j1, b2, j2):
                    entries[
                        (self.idx(b1, j1), self.idx(b2, j2), self.idx(a1, i1), self.idx(a2, i2))
                    ] = 1
        return SparseTensor((d,) * 4, 2, entries)

    def merge(self) -> SparseTensor:
        """[R]^{b j}_{a1 i1, a2 i2} = [i1 = i2 = j][a1 + a2 = b mod m]."""
        d, m = self.dim, self.m
        entries = {}
        for (a1, i1), (a2, i2) in itertools.product(self._labels, repeat=2):
            if i1 != i2:
                continue
            b = (a1 + a2) % m
            if b:
                entries[(self.idx(b, i1), self.idx(a1, i1), self.idx(a2, i2))] = 1
        return SparseTensor((d,) * 3, 1, entries)

    def connecter(self) -> SparseTensor:
        m = self.m
        return self._tensor2(
            lambda a1, i1, a2, i2, b1, j1, b2, j2: i1 == i2 == j1 == j2
            and (a1 + a2) % m == (b1 + b2) % m
        )

    def aabb(self) -> SparseTensor:
        m = self.m
        return self._tensor2(
            lambda a1, i1, a2, i2, b1, j1, b2, j2: (a1 + a2) % m == 0
            and (b1 + b2) % m == 0
            and i1 == i2 != j1 == j2
        )

    def abab(self) -> SparseTensor:
        return self._tensor2(
            lambda a1, i1, a2, i2, b1, j1, b2, j2: a1 == b2
            and a2 == b1
            and i1 == j2 != i2 == j1
        )

    def abba(self) -> SparseTensor:
        return self._tensor2(
            lambda a1, i1, a2, i2, b1, j1, b2, j2: a1 == b1
            and a2 == b2
            and i1 == j1 != i2 == j2
        )

    def aabb_capital(self) -> SparseTensor:
        """All four cyclic values equal with vanishing sums; the i,j pattern
        follows the two-block reading (i1 = i2 != j1 = j2) by default, or the
        relaxed reading without the inequality when aabb_strict is False."""
        m = self.m
        if self.aabb_strict:
            return self._tensor2(
                lambda a1, i1, a2, i2, b1, j1, b2, j2: a1 == a2 == b1 == b2
                and (a1 + a2) % m == 0
                and (b1 + b2) % m == 0
                and i1 == i2 != j1 == j2
            )
        return self._tensor2(
            lambda a1, i1, a2, i2, b1, j1, b2, j2: a1 == a2 == b1 == b2
            and (a1 + a2) % m == 0
            and (b1 + b2) % m == 0
            and i1 == i2
            and j1 == j2
        )

    def all_named(self) -> dict[str, SparseTensor]:
        return {
            "merge": self.merge(),
            "connecter": self.connecter(),
            "AAbb": self.aabb(),
            "aBaB": self.abab(),
            "aBBa": self.abba(),
            "AABB": self.aabb_capital(),
        }


def hamming_R_operators(m: int, n: int, aabb_strict: bool = True) -> HammingOperators:
    return HammingOperators(m, n, aabb_strict)
