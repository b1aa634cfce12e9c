"""The quiver attached to a parabolic geometry.

Vertices are p-dominant weights, arrows subtract nilradical roots and
exist exactly when the Levi tensor multiplicity is 1.  The quiver is
infinite; computations work on finite forward windows.  Relation
instances are only defined for the Borel case, where the relations are
the Serre-type commutation relations with Chevalley coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass

from .geometry import ParabolicGeometry
from .levi import arrow_multiplicity
from .rootsystem import Root, Weight

GENERATING = "generating"
DERIVED = "derived"


@dataclass(frozen=True, order=True)
class Arrow:
    source: Weight
    root: Root
    target: Weight
    kind: str


@dataclass(frozen=True)
class QuiverWindow:
    vertices: tuple
    arrows: tuple


@dataclass(frozen=True, order=True)
class RelationInstance:
    """One commutation relation at a vertex: paths beta,gamma vs direct beta+gamma."""

    source: Weight
    beta: Root
    gamma: Root
    coefficient: int  # Chevalley constant N(-beta, -gamma)


def is_vertex(geom: ParabolicGeometry, lam: Weight) -> bool:
    return geom.is_p_dominant(lam)


def arrows_from(geom: ParabolicGeometry, lam: Weight) -> tuple:
    """All quiver arrows leaving lam, in deterministic root order."""
    if not is_vertex(geom, lam):
        raise ValueError(f"{lam} is not a vertex for levi {geom.levi}")
    generating = set(geom.generating_roots)
    out = []
    for beta in geom.nilradical_roots:
        mu = tuple(a - b for a, b in zip(lam, beta.fund))
        if not geom.is_p_dominant(mu):
            continue
        if arrow_multiplicity(geom, lam, mu) == 1:
            kind = GENERATING if beta in generating else DERIVED
            out.append(Arrow(lam, beta, mu, kind))
    return tuple(out)


def quiver_window(geom: ParabolicGeometry, center: Weight, radius: int) -> QuiverWindow:
    """Vertices reachable from center in at most ``radius`` forward arrow
    steps, together with all induced arrows."""
    if not is_vertex(geom, center):
        raise ValueError(f"{center} is not a vertex for levi {geom.levi}")
    if radius < 0:
        raise ValueError("radius must be non-negative")
    vertices = {center}
    frontier = [center]
    for _ in range(radius):
        nxt = []
        for v in frontier:
            for arr in arrows_from(geom, v):
                if arr.target not in vertices:
                    vertices.add(arr.target)
                    nxt.append(arr.target)
        frontier = nxt
    arrows = []
    for v in sorted(vertices):
        for arr in arrows_from(geom, v):
            if arr.target in vertices:
                arrows.append(arr)
    return QuiverWindow(tuple(sorted(vertices)), tuple(arrows))


def borel_relation_instances(geom: ParabolicGeometry, support) -> tuple:
    """All relation instances touching the given support (Borel only).

    One instance per vertex lam in support and unordered pair of distinct
    positive roots {beta, gamma} such that a composition midpoint or the
    direct target lam - beta - gamma lies in support.
    """
    if not geom.is_borel:
        raise ValueError("relations are only known for the Borel parabolic")
    rs = geom.root_system
    support = set(support)
    out = []
    pos = rs.positive_roots
    for lam in sorted(support):
        for i, beta in enumerate(pos):
            for gamma in pos[i + 1:]:
                mid_b = tuple(a - b for a, b in zip(lam, beta.fund))
                mid_g = tuple(a - b for a, b in zip(lam, gamma.fund))
                end = tuple(a - b for a, b in zip(mid_b, gamma.fund))
                if mid_b in support or mid_g in support or end in support:
                    n = rs.chevalley(-beta, -gamma)
                    out.append(RelationInstance(lam, beta, gamma, n))
    return tuple(out)
