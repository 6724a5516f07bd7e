"""Finite abelian groups as products of cyclic factors, and their characters.

A group Z_{m_1} x ... x Z_{m_n} owns a fixed enumeration of its N = prod m_i
elements (lexicographic, last coordinate fastest).  Elements double as
character labels: the character labelled mu evaluates as

    tau_mu(alpha) = prod_i gamma_i^(alpha_i * mu_i),   gamma_i = zeta_M^(M/m_i)

with M = lcm(m_i), so every character value is a single root of unity in
Q(zeta_M).  The primitive-root choice gamma_i = zeta_M^(M/m_i) is fixed once
and for all.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd, prod

from .cyclotomic import Cyclotomic
from .errors import InvalidInputError


@dataclass(frozen=True)
class GroupElement:
    """A tuple of residues; also used as a character label."""

    coords: tuple[int, ...]

    def __iter__(self):
        return iter(self.coords)

    def __len__(self):
        return len(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    @property
    def degree(self) -> int:
        """Number of nonzero coordinates (deg mu)."""
        return sum(1 for c in self.coords if c)

    @property
    def zeros(self) -> int:
        """Number of zero coordinates (l_mu in the Hamming spectrum)."""
        return sum(1 for c in self.coords if not c)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def to_json(self):
        return list(self.coords)

    def __repr__(self):
        return f"({','.join(map(str, self.coords))})"


class AbelianGroup:
    """Z_{m_1} x ... x Z_{m_n} with a fixed element enumeration."""

    def __init__(self, orders):
        orders = tuple(int(m) for m in orders)
        if not orders:
            raise InvalidInputError("group needs at least one cyclic factor")
        if any(m < 1 for m in orders):
            raise InvalidInputError(f"cyclic orders must be >= 1, got {orders}")
        self.orders = orders
        self.rank = len(orders)
        self.order = prod(orders)  # N
        exponent = 1
        for m in orders:
            exponent = exponent * m // gcd(exponent, m)
        self.exponent = exponent  # M

    # -- elements ------------------------------------------------------------

    def element(self, coords) -> GroupElement:
        coords = tuple(int(c) for c in coords)
        if len(coords) != self.rank:
            raise InvalidInputError(
                f"element needs {self.rank} coordinates, got {len(coords)}"
            )
        return GroupElement(tuple(c % m for c, m in zip(coords, self.orders)))

    def zero(self) -> GroupElement:
        return GroupElement((0,) * self.rank)

    def epsilon(self, i: int, a: int = 1) -> GroupElement:
        """a * eps_i, the scaled i-th canonical generator (i is 0-based)."""
        coords = [0] * self.rank
        coords[i] = a % self.orders[i]
        return GroupElement(tuple(coords))

    def contains(self, el: GroupElement) -> bool:
        return len(el.coords) == self.rank and all(
            0 <= c < m for c, m in zip(el.coords, self.orders)
        )

    def _check(self, el: GroupElement):
        if not self.contains(el):
            raise InvalidInputError(f"element {el} is not valid for orders {self.orders}")

    def add(self, a: GroupElement, b: GroupElement) -> GroupElement:
        self._check(a)
        self._check(b)
        return GroupElement(
            tuple((x + y) % m for x, y, m in zip(a.coords, b.coords, self.orders))
        )

    def neg(self, a: GroupElement) -> GroupElement:
        self._check(a)
        return GroupElement(tuple((-x) % m for x, m in zip(a.coords, self.orders)))

    def sub(self, a: GroupElement, b: GroupElement) -> GroupElement:
        return self.add(a, self.neg(b))

    def sum(self, elems) -> GroupElement:
        total = self.zero()
        for e in elems:
            total = self.add(total, e)
        return total

    def elements(self):
        """All N elements, lexicographic with the last coordinate fastest."""
        for coords in itertools.product(*(range(m) for m in self.orders)):
            yield GroupElement(coords)

    def index(self, el: GroupElement) -> int:
        """Position of el in the fixed enumeration (mixed-radix value)."""
        self._check(el)
        idx = 0
        for c, m in zip(el.coords, self.orders):
            idx = idx * m + c
        return idx

    def element_at(self, idx: int) -> GroupElement:
        if not 0 <= idx < self.order:
            raise InvalidInputError(f"element index {idx} out of range 0..{self.order - 1}")
        coords = []
        for m in reversed(self.orders):
            coords.append(idx % m)
            idx //= m
        return GroupElement(tuple(reversed(coords)))

    def degree_major_elements(self):
        """Presentation order used for displays: grouped by degree, then by
        the fixed enumeration inside each degree block."""
        return sorted(self.elements(), key=lambda e: (e.degree, self.index(e)))

    # -- characters ------------------------------------------------------------

    def char_value(self, mu: GroupElement, alpha: GroupElement) -> Cyclotomic:
        """tau_mu(alpha), a root of unity in Q(zeta_M)."""
        self._check(mu)
        self._check(alpha)
        M = self.exponent
        e = 0
        for m, x, y in zip(self.orders, mu.coords, alpha.coords):
            e += (M // m) * x * y
        return Cyclotomic.zeta(M, e % M)

    def char_exponent(self, mu: GroupElement, alpha: GroupElement) -> int:
        """k with tau_mu(alpha) = zeta_M^k (useful for fast integer paths)."""
        M = self.exponent
        e = 0
        for m, x, y in zip(self.orders, mu.coords, alpha.coords):
            e += (M // m) * x * y
        return e % M

    # -- misc -------------------------------------------------------------------

    def subgroup_closure(self, gens) -> set[GroupElement]:
        """Subgroup generated by gens (BFS over addition)."""
        seen = {self.zero()}
        frontier = [self.zero()]
        gens = list(gens)
        while frontier:
            cur = frontier.pop()
            for g in gens:
                nxt = self.add(cur, g)
                if nxt not in seen:
                    seen.add(nxt)
                    frontier.append(nxt)
        return seen

    def to_json(self):
        return {"orders": list(self.orders)}

    def __repr__(self):
        return f"AbelianGroup{self.orders}"

    def __eq__(self, other):
        return isinstance(other, AbelianGroup) and self.orders == other.orders

    def __hash__(self):
        return hash(self.orders)


def make_group(orders) -> AbelianGroup:
    """Build Z_{m_1} x ... x Z_{m_n}; rejects empty or non-positive orders."""
    return AbelianGroup(orders)


def char_value(group: AbelianGroup, mu: GroupElement, alpha: GroupElement) -> Cyclotomic:
    return group.char_value(mu, alpha)
