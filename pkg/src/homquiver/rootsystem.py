"""Exact combinatorial model of simply-laced (ADE) root systems.

Weights live in fundamental-weight coordinates (``coords[i] = <lam, alpha_i^v>``),
roots carry both simple-root and fundamental-weight coordinates, and the
normalization of the invariant form gives every root squared length 2.  The
structure-constant signs come from a bimultiplicative asymmetry function of
Frenkel-Kac type; any other admissible sign choice yields an equivalent
theory, and nothing downstream may depend on the particular one.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

Weight = tuple  # integer vector in fundamental-weight coordinates

_RANK_BOUNDS = {"A": (1, None), "D": (4, None), "E": (6, 8)}


@dataclass(frozen=True, order=True)
class CartanType:
    """A simply-laced Cartan type: series letter plus rank."""

    series: str
    rank: int

    def __post_init__(self):
        lo_hi = _RANK_BOUNDS.get(self.series)
        if lo_hi is None:
            raise ValueError(f"unsupported series {self.series!r}: must be A, D or E")
        lo, hi = lo_hi
        if self.rank < lo or (hi is not None and self.rank > hi):
            raise ValueError(f"invalid rank {self.rank} for series {self.series}")

    @classmethod
    def parse(cls, text: str) -> "CartanType":
        m = re.fullmatch(r"([ADE])(\d+)", text.strip())
        if not m:
            raise ValueError(f"cannot parse Cartan type {text!r} (expected e.g. 'A2')")
        return cls(m.group(1), int(m.group(2)))

    def __str__(self):
        return f"{self.series}{self.rank}"


def _dynkin_edges(ct: CartanType) -> set:
    """Edges of the Dynkin diagram, Bourbaki numbering, 1-based nodes."""
    n = ct.rank
    if ct.series == "A":
        return {(i, i + 1) for i in range(1, n)}
    if ct.series == "D":
        edges = {(i, i + 1) for i in range(1, n - 1)}
        edges.add((n - 2, n))
        return edges
    # E series: chain 1-3-4-5-6(-7)(-8), with node 2 hanging off node 4.
    chain = [1, 3, 4, 5, 6, 7, 8][:n - 1]
    edges = {(a, b) for a, b in zip(chain, chain[1:])}
    edges.add((2, 4))
    return edges


def cartan_matrix(ct: CartanType) -> tuple:
    n = ct.rank
    edges = _dynkin_edges(ct)
    mat = [[0] * n for _ in range(n)]
    for i in range(n):
        mat[i][i] = 2
    for a, b in edges:
        mat[a - 1][b - 1] = -1
        mat[b - 1][a - 1] = -1
    return tuple(tuple(row) for row in mat)


@dataclass(frozen=True, order=True)
class Root:
    """A root, carrying simple-root and fundamental-weight coordinates."""

    simple: tuple
    fund: tuple

    @property
    def height(self) -> int:
        return sum(self.simple)

    @property
    def is_positive(self) -> bool:
        return all(c >= 0 for c in self.simple) and any(c > 0 for c in self.simple)

    def __neg__(self) -> "Root":
        return Root(tuple(-c for c in self.simple), tuple(-c for c in self.fund))


class RootSystem:
    """Positive roots, invariant form and Chevalley signs for an ADE type."""

    def __init__(self, cartan_type: CartanType):
        self.cartan_type = cartan_type
        self.rank = cartan_type.rank
        self.cartan_matrix = cartan_matrix(cartan_type)
        self.cartan_inverse = _invert(self.cartan_matrix)
        self.rho: Weight = (1,) * self.rank
        self.positive_roots = self._close_positive_roots()
        self._roots_by_simple = {}
        for r in self.positive_roots:
            self._roots_by_simple[r.simple] = r
            self._roots_by_simple[(-r).simple] = -r

    def __eq__(self, other):
        return isinstance(other, RootSystem) and self.cartan_type == other.cartan_type

    def __hash__(self):
        return hash(self.cartan_type)

    def __repr__(self):
        return f"RootSystem({self.cartan_type})"

    def _make_root(self, simple: tuple) -> Root:
        fund = tuple(
            sum(self.cartan_matrix[i][j] * simple[j] for j in range(self.rank))
            for i in range(self.rank)
        )
        return Root(simple, fund)

    def _close_positive_roots(self) -> tuple:
        """Height-by-height closure from the simple roots.

        For distinct positive roots in the ADE case, beta + alpha_i is a
        root exactly when (beta, alpha_i) = -1.
        """
        simples = [
            self._make_root(tuple(int(i == j) for j in range(self.rank)))
            for i in range(self.rank)
        ]
        levels = [list(simples)]
        seen = {r.simple for r in simples}
        while levels[-1]:
            nxt = []
            for beta in levels[-1]:
                for i, alpha in enumerate(simples):
                    if beta.fund[i] == -1:
                        cand = tuple(
                            b + a for b, a in zip(beta.simple, alpha.simple)
                        )
                        if cand not in seen:
                            seen.add(cand)
                            nxt.append(self._make_root(cand))
            levels.append(nxt)
        roots = [r for level in levels for r in level]
        roots.sort(key=lambda r: (r.height, r.simple))
        return tuple(roots)

    def simple_root(self, i: int) -> Root:
        """Simple root alpha_i, 1-based index."""
        if not 1 <= i <= self.rank:
            raise ValueError(f"simple root index {i} out of range 1..{self.rank}")
        return self._roots_by_simple[tuple(int(j == i - 1) for j in range(self.rank))]

    def root(self, simple: tuple):
        """The Root with the given simple coordinates, or None."""
        return self._roots_by_simple.get(tuple(simple))

    def is_root(self, simple: tuple) -> bool:
        return tuple(simple) in self._roots_by_simple

    def root_from_fund(self, fund: tuple):
        """The Root with the given fundamental coordinates, or None."""
        simple = tuple(
            sum(self.cartan_inverse[i][j] * fund[j] for j in range(self.rank))
            for i in range(self.rank)
        )
        if any(c.denominator != 1 for c in simple):
            return None
        return self.root(tuple(int(c) for c in simple))

    # ----- invariant form ---------------------------------------------------

    def inner(self, x, y: Root) -> int:
        """Killing-normalized product (x, y) of a weight or root with a root.

        For ADE this equals the coroot pairing <x, y^v>; with x given in
        fundamental coordinates it is a plain coordinate contraction.
        """
        xf = x.fund if isinstance(x, Root) else tuple(x)
        if len(xf) != self.rank:
            raise ValueError("rank mismatch")
        return sum(a * b for a, b in zip(xf, y.simple))

    def weight_inner(self, x: Weight, y: Weight) -> Fraction:
        """(x, y) for two weights in fundamental coordinates (rational)."""
        acc = Fraction(0)
        for i in range(self.rank):
            if x[i]:
                for j in range(self.rank):
                    acc += x[i] * self.cartan_inverse[i][j] * y[j]
        return acc

    def reflect(self, lam: Weight, alpha: Root) -> Weight:
        """Reflection of lam in the hyperplane orthogonal to alpha."""
        c = self.inner(lam, alpha)
        return tuple(x - c * a for x, a in zip(lam, alpha.fund))

    def simple_reflect(self, lam: Weight, i: int) -> Weight:
        """Reflection at the simple root alpha_i (1-based), a coordinate update."""
        c = lam[i - 1]
        row = self.cartan_matrix[i - 1]
        return tuple(x - c * a for x, a in zip(lam, row))

    # ----- structure constants ----------------------------------------------

    def asymmetry(self, a, b) -> int:
        """Bimultiplicative asymmetry function on the root lattice.

        On simple roots: eps(a_i, a_i) = -1, eps(a_i, a_j) = (-1)^(a_i, a_j)
        for i < j, and +1 for i > j; extended bimultiplicatively.  Satisfies
        eps(a, b) * eps(b, a) = (-1)^(a, b).
        """
        av = a.simple if isinstance(a, Root) else tuple(a)
        bv = b.simple if isinstance(b, Root) else tuple(b)
        sign = 1
        for i, ai in enumerate(av):
            if not ai:
                continue
            for j, bj in enumerate(bv):
                if not bj or (ai * bj) % 2 == 0:
                    continue
                if i == j or (i < j and self.cartan_matrix[i][j] % 2):
                    sign = -sign
        return sign

    def chevalley(self, a, b) -> int:
        """Chevalley constant N_ab with [e_a, e_b] = N_ab e_(a+b); 0 if a+b is no root."""
        av = a.simple if isinstance(a, Root) else tuple(a)
        bv = b.simple if isinstance(b, Root) else tuple(b)
        if not (self.is_root(av) and self.is_root(bv)):
            raise ValueError("chevalley arguments must be roots")
        if av == bv or all(x == -y for x, y in zip(av, bv)):
            raise ValueError("chevalley is undefined for a = +-b")
        s = tuple(x + y for x, y in zip(av, bv))
        if not self.is_root(s):
            return 0
        return self.asymmetry(av, bv)


def _invert(mat: tuple) -> tuple:
    n = len(mat)
    aug = [[Fraction(mat[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
           for i in range(n)]
    for col in range(n):
        piv = next(i for i in range(col, n) if aug[i][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col] != 0:
                c = aug[i][col]
                aug[i] = [a - c * b for a, b in zip(aug[i], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


@lru_cache(maxsize=None)
def build_root_system(cartan_type) -> RootSystem:
    """Construct (and cache) the root system of the given Cartan type.

    Accepts a CartanType or a string such as "A2" or "E6".
    """
    if isinstance(cartan_type, str):
        cartan_type = CartanType.parse(cartan_type)
    return RootSystem(cartan_type)
