"""Sections of homogeneous bundles from their quiver representations.

Graded cohomology is Bott's algorithm applied summand-wise.  Global
sections of a general bundle come from the kernel of the block map that
composes, for each dominant vertex and each simple direction off the
Levi, the arrow matrices along the path to the reflected partner vertex.
For chain-supported (A_m-type) bundles the same answer is cross-checked
against the Gabriel interval decomposition.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bott import bott, weyl_dim
from .bundle import QuiverRep, RelationError, check_relations, gabriel_decompose, is_am_type, validate
from .linalg import Matrix
from .rootsystem import Weight


@dataclass(frozen=True)
class Pairing:
    """A dominant vertex paired with its length-1 reflection partner.

    ``target = source - k * alpha_j`` with ``k = source[j] + 1``; the
    partner carries the same cohomology module one degree higher.
    """

    source: Weight
    index: int  # 1-based simple-root index, outside the Levi subset
    k: int
    target: Weight


@dataclass(frozen=True)
class IsotypicEntry:
    weight: Weight
    multiplicity: int
    dimension: int  # dimension of one copy


@dataclass(frozen=True)
class GModuleDecomposition:
    """A G-module presented as a multiset of isotypical components."""

    entries: tuple
    notes: tuple = ()

    @property
    def total_dimension(self) -> int:
        return sum(e.multiplicity * e.dimension for e in self.entries)

    def multiplicity(self, weight: Weight) -> int:
        for e in self.entries:
            if e.weight == tuple(weight):
                return e.multiplicity
        return 0


def _decomposition(entries: dict, notes=()) -> GModuleDecomposition:
    items = tuple(
        IsotypicEntry(w, m, d) for w, (m, d) in sorted(entries.items()) if m > 0
    )
    return GModuleDecomposition(items, tuple(notes))


def h_graded(rep: QuiverRep, degree: int) -> GModuleDecomposition:
    """Cohomology of the graded bundle in one degree (Bott, summand-wise)."""
    acc = {}
    for lam, d in rep.support.items():
        res = bott(rep.geometry, lam)
        if res.is_singular or res.degree != degree:
            continue
        m, dim = acc.get(res.weight, (0, res.dimension))
        acc[res.weight] = (m + d, dim)
    return _decomposition(acc)


def euler(rep: QuiverRep) -> int:
    """Euler characteristic: alternating sum of Bott dimensions."""
    total = 0
    for lam, d in rep.support.items():
        res = bott(rep.geometry, lam)
        if not res.is_singular:
            total += d * (-1) ** res.degree * res.dimension
    return total


def find_pairings(rep: QuiverRep) -> tuple:
    """All pairings of dominant support vertices with supported partners."""
    geom = rep.geometry
    out = []
    for lam in sorted(rep.support):
        if any(c < 0 for c in lam):
            continue
        for j in range(1, geom.root_system.rank + 1):
            if j in geom.levi:
                continue
            k = lam[j - 1] + 1
            alpha = geom.root_system.simple_root(j)
            mu = tuple(a - k * b for a, b in zip(lam, alpha.fund))
            if mu in rep.support:
                out.append(Pairing(lam, j, k, mu))
    return tuple(out)


def compose_path(rep: QuiverRep, pairing: Pairing) -> Matrix:
    """Product of the arrow matrices along the pairing path.

    Any missing intermediate vertex or arrow contributes a zero map, so
    the product is the zero matrix in that case.
    """
    if pairing.source not in rep.support or pairing.target not in rep.support:
        raise ValueError("pairing endpoints must lie in the support")
    alpha = rep.geometry.root_system.simple_root(pairing.index)
    return rep.path_matrix(pairing.source, (alpha,) * pairing.k)


def _section_multiplicities(rep: QuiverRep) -> dict:
    """Kernel dimension of the stacked pairing maps at each dominant vertex."""
    pairings = find_pairings(rep)
    out = {}
    for lam in sorted(rep.support):
        if any(c < 0 for c in lam):
            continue
        mats = [compose_path(rep, p) for p in pairings if p.source == lam]
        if not mats:
            out[lam] = rep.support[lam]
            continue
        stacked = mats[0]
        for m in mats[1:]:
            stacked = stacked.vstack(m)
        out[lam] = stacked.nullity()
    return out


def h0(rep: QuiverRep) -> GModuleDecomposition:
    """Global sections of the bundle: the kernel of the pairing block map.

    On the Borel parabolic the representation must satisfy the quiver
    relations; for other parabolics no relation check exists (the general
    relation set is unknown) and the caller vouches for validity, which
    the result records as a note.
    """
    errors = validate(rep)
    if errors:
        raise ValueError("invalid representation: " + "; ".join(errors))
    notes = ()
    if rep.geometry.is_borel:
        violated = check_relations(rep)
        if violated:
            raise RelationError(violated)
    else:
        notes = (
            "non-Borel parabolic: relations unchecked, representation validity "
            "is the caller's claim",
        )
    rs = rep.geometry.root_system
    acc = {
        lam: (m, weyl_dim(rs, lam))
        for lam, m in _section_multiplicities(rep).items()
    }
    return _decomposition(acc, notes)


def h0_am(rep: QuiverRep) -> GModuleDecomposition:
    """Global sections of an A_m-type bundle, cross-checked against Gabriel.

    The kernel computation restricted to the single chain must agree with
    scoring the interval decomposition (an interval containing a dominant
    vertex contributes one copy unless it also contains the vertex's
    pairing partner); disagreement signals a bug, not a data problem.
    """
    path = is_am_type(rep)
    if path is None:
        raise ValueError("not an A_m-type support")
    errors = validate(rep)
    if errors:
        raise ValueError("invalid representation: " + "; ".join(errors))
    if rep.geometry.is_borel:
        violated = check_relations(rep)
        if violated:
            raise RelationError(violated)

    mults = _section_multiplicities(rep)

    gab = gabriel_decompose(rep)
    chain = gab.path.vertices
    position = {v: i for i, v in enumerate(chain)}
    pairings = {p.source: p for p in find_pairings(rep)}
    for lam, m in mults.items():
        p = pairings.get(lam)
        pos = position[lam]
        score = 0
        for (i, j), mult in gab.intervals:
            if not i <= pos <= j:
                continue
            if p is not None and p.target in position and i <= position[p.target] <= j:
                continue
            score += mult
        if score != m:
            raise AssertionError(
                f"Gabriel scoring ({score}) disagrees with kernel computation "
                f"({m}) at {lam}"
            )

    rs = rep.geometry.root_system
    acc = {lam: (m, weyl_dim(rs, lam)) for lam, m in mults.items()}
    return _decomposition(acc)
