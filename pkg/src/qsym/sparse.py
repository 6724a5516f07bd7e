"""Exact sparse tensors with cyclotomic entries.

A tensor maps k input legs to l output legs; entries are keyed by the full
index tuple (output indices first, then input indices) and absent keys are
zero.  ``shape`` lists the axis dimensions in the same order and ``out_axes``
records how many leading axes are outputs, which fixes how composition
contracts.  All arithmetic is exact; equality is entrywise.
"""

from __future__ import annotations

from fractions import Fraction

from .config import guard_sparse
from .cyclotomic import Cyclotomic, cyc
from .errors import InvalidInputError


def _value(x) -> Cyclotomic:
    return x if isinstance(x, Cyclotomic) else cyc(x)


class SparseTensor:
    __slots__ = ("shape", "out_axes", "entries")

    def __init__(self, shape, out_axes: int, entries=None):
        shape = tuple(int(d) for d in shape)
        if not 0 <= out_axes <= len(shape):
            raise InvalidInputError(f"out_axes {out_axes} out of range for {shape}")
        store = {}
        for idx, val in (entries or {}).items():
            idx = tuple(idx)
            if len(idx) != len(shape) or any(
                not 0 <= i < d for i, d in zip(idx, shape)
            ):
                raise InvalidInputError(f"index {idx} out of bounds for shape {shape}")
            val = _value(val)
            if not val.is_zero():
                store[idx] = val
        guard_sparse(len(store), "tensor construction")
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "out_axes", out_axes)
        object.__setattr__(self, "entries", store)

    def __setattr__(self, *a):
        raise AttributeError("SparseTensor instances are immutable")

    # -- basic structure ---------------------------------------------------------

    @property
    def in_axes(self) -> int:
        return len(self.shape) - self.out_axes

    @property
    def out_shape(self):
        return self.shape[: self.out_axes]

    @property
    def in_shape(self):
        return self.shape[self.out_axes:]

    def nnz(self) -> int:
        return len(self.entries)

    def is_zero(self) -> bool:
        return not self.entries

    def __getitem__(self, idx):
        from .cyclotomic import ZERO

        return self.entries.get(tuple(idx), ZERO)

    # -- constructors ----------------------------------------------------------------

    @classmethod
    def zeros(cls, shape, out_axes: int) -> "SparseTensor":
        return cls(shape, out_axes, {})

    @classmethod
    def identity(cls, dims) -> "SparseTensor":
        """Identity operator on a tensor product of legs with the given dims."""
        dims = tuple(dims)
        entries = {}

        def rec(prefix):
            if len(prefix) == len(dims):
                entries[tuple(prefix) + tuple(prefix)] = 1
                return
            for i in range(dims[len(prefix)]):
                rec(prefix + [i])

        rec([])
        return cls(dims + dims, len(dims), entries)

    @classmethod
    def from_matrix(cls, rows) -> "SparseTensor":
        """Dense 2-d array (list of rows) to a one-leg-in one-leg-out tensor."""
        nr = len(rows)
        nc = len(rows[0]) if nr else 0
        entries = {}
        for i, row in enumerate(rows):
            if len(row) != nc:
                raise InvalidInputError("ragged matrix")
            for j, v in enumerate(row):
                v = _value(v)
                if not v.is_zero():
                    entries[(i, j)] = v
        return cls((nr, nc), 1, entries)

    # -- linear operations --------------------------------------------------------------

    def _check_same_shape(self, other):
        if self.shape != other.shape or self.out_axes != other.out_axes:
            raise InvalidInputError(
                f"shape mismatch: {self.shape}/{self.out_axes} vs "
                f"{other.shape}/{other.out_axes}"
            )

    def __add__(self, other):
        self._check_same_shape(other)
        entries = dict(self.entries)
        for idx, v in other.entries.items():
            s = entries.get(idx)
            entries[idx] = v if s is None else s + v
        return SparseTensor(self.shape, self.out_axes, entries)

    def __neg__(self):
        return SparseTensor(
            self.shape, self.out_axes, {i: -v for i, v in self.entries.items()}
        )

    def __sub__(self, other):
        return self + (-other)

    def scale(self, factor) -> "SparseTensor":
        factor = _value(factor)
        if factor.is_zero():
            return SparseTensor.zeros(self.shape, self.out_axes)
        return SparseTensor(
            self.shape, self.out_axes, {i: v * factor for i, v in self.entries.items()}
        )

    __mul__ = scale
    __rmul__ = scale

    # -- multiplicative structure -----------------------------------------------------------

    def compose(self, other: "SparseTensor") -> "SparseTensor":
        """self after other: contract self's input legs with other's outputs."""
        if self.in_shape != other.out_shape:
            raise InvalidInputError(
                f"cannot compose: input shape {self.in_shape} vs "
                f"output shape {other.out_shape}"
            )
        k = self.out_axes
        by_mid = {}
        for idx, v in other.entries.items():
            mid = idx[: other.out_axes]
            by_mid.setdefault(mid, []).append((idx[other.out_axes:], v))
        acc = {}
        for idx, v in self.entries.items():
            mid = idx[k:]
            hits = by_mid.get(mid)
            if not hits:
                continue
            out = idx[:k]
            for tail, w in hits:
                key = out + tail
                prod = v * w
                s = acc.get(key)
                acc[key] = prod if s is None else s + prod
        return SparseTensor(self.out_shape + other.in_shape, k, acc)

    def __matmul__(self, other):
        return self.compose(other)

    def tensor(self, other: "SparseTensor") -> "SparseTensor":
        """Horizontal juxtaposition: outputs then outputs, inputs then inputs."""
        guard_sparse(self.nnz() * other.nnz(), "tensor product")
        k1, k2 = self.out_axes, other.out_axes
        entries = {}
        for i1, v1 in self.entries.items():
            o1, in1 = i1[:k1], i1[k1:]
            for i2, v2 in other.entries.items():
                o2, in2 = i2[:k2], i2[k2:]
                entries[o1 + o2 + in1 + in2] = v1 * v2
        return SparseTensor(
            self.out_shape + other.out_shape + self.in_shape + other.in_shape,
            k1 + k2,
            entries,
        )

    def adjoint(self) -> "SparseTensor":
        """Conjugate transpose: swap leg roles and conjugate entries."""
        k = self.out_axes
        entries = {
            idx[k:] + idx[:k]: v.conj() for idx, v in self.entries.items()
        }
        return SparseTensor(self.in_shape + self.out_shape, self.in_axes, entries)

    def transform_in_leg(self, leg: int, matrix: dict, new_dim: int) -> "SparseTensor":
        """Substitute input leg ``leg`` (0-based among inputs) through
        ``matrix``: new[.., mu ,..] = sum_alpha old[.., alpha ,..] * matrix[alpha, mu]."""
        axis = self.out_axes + leg
        cols = {}
        for (a, m), v in matrix.items():
            cols.setdefault(a, []).append((m, _value(v)))
        acc = {}
        for idx, v in self.entries.items():
            for m, w in cols.get(idx[axis], ()):
                key = idx[:axis] + (m,) + idx[axis + 1:]
                prod = v * w
                s = acc.get(key)
                acc[key] = prod if s is None else s + prod
        shape = list(self.shape)
        shape[axis] = new_dim
        return SparseTensor(shape, self.out_axes, acc)

    def transform_out_leg(self, leg: int, matrix: dict, new_dim: int) -> "SparseTensor":
        """Substitute output leg ``leg``: new[.., nu ,..] = sum_beta
        matrix[nu, beta] * old[.., beta ,..]."""
        axis = leg
        rows = {}
        for (n, b), v in matrix.items():
            rows.setdefault(b, []).append((n, _value(v)))
        acc = {}
        for idx, v in self.entries.items():
            for n, w in rows.get(idx[axis], ()):
                key = idx[:axis] + (n,) + idx[axis + 1:]
                prod = v * w
                s = acc.get(key)
                acc[key] = prod if s is None else s + prod
        shape = list(self.shape)
        shape[axis] = new_dim
        return SparseTensor(shape, self.out_axes, acc)

    def trace(self) -> Cyclotomic:
        """Sum of diagonal entries (square operator only)."""
        if self.out_shape != self.in_shape:
            raise InvalidInputError("trace needs matching input/output shapes")
        from .cyclotomic import ZERO

        total = ZERO
        for idx, v in self.entries.items():
            if idx[: self.out_axes] == idx[self.out_axes:]:
                total = total + v
        return total

    # -- comparison and export -------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, SparseTensor):
            return NotImplemented
        return (
            self.shape == other.shape
            and self.out_axes == other.out_axes
            and self.entries == other.entries
        )

    def __hash__(self):
        raise TypeError("SparseTensor is not hashable")

    def __repr__(self):
        return (
            f"SparseTensor(shape={self.shape}, out_axes={self.out_axes}, "
            f"nnz={self.nnz()})"
        )

    def to_json(self):
        return {
            "shape": list(self.shape),
            "out_axes": self.out_axes,
            "entries": [
                {"idx": list(idx), "value": self.entries[idx].to_json()}
                for idx in sorted(self.entries)
            ],
        }

    @classmethod
    def from_json(cls, data) -> "SparseTensor":
        return cls(
            data["shape"],
            data["out_axes"],
            {
                tuple(e["idx"]): Cyclotomic.from_json(e["value"])
                for e in data["entries"]
            },
        )

    def all_rational(self) -> bool:
        return all(v.is_rational() for v in self.entries.values())

    def rational_entries(self) -> dict[tuple, Fraction]:
        return {i: v.as_fraction() for i, v in self.entries.items()}
