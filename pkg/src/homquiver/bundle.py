"""Homogeneous bundles as quiver representations.

A representation assigns a multiplicity dimension to finitely many
vertices and a rational matrix to each arrow between supported vertices;
an absent arrow is the zero map.  On the Borel parabolic the commutation
relations with Chevalley coefficients cut out exactly the representations
coming from bundles, and the non-generating ("derived") arrow matrices
are determined by the generating ones: ``solve_derived_arrows`` performs
that completion or reports the violated instances.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .geometry import ParabolicGeometry, build_geometry
from .levi import arrow_multiplicity
from .linalg import (
    Matrix,
    preimage_basis,
    row_space_basis,
    solve_in_basis,
    span_intersection,
)
from .quiver import RelationInstance, borel_relation_instances
from .rootsystem import Root, Weight


class RelationError(Exception):
    """Raised when a representation violates the Borel quiver relations."""

    def __init__(self, instances):
        self.instances = tuple(instances)
        super().__init__(f"{len(self.instances)} violated relation instance(s)")


class QuiverRep:
    """A finitely supported quiver representation over the rationals.

    ``support`` maps vertex weights to positive dimensions; ``arrows``
    maps (source weight, root) to the matrix of the corresponding map,
    shaped target-dim x source-dim.  Instances are treated as immutable
    values.
    """

    def __init__(self, geometry: ParabolicGeometry, support, arrows=()):
        self.geometry = geometry
        self.support = {tuple(k): int(v) for k, v in dict(support).items()}
        self.arrows = {}
        arrows = dict(arrows)
        for (src, root), mat in arrows.items():
            if not isinstance(root, Root):
                root = geometry.root_system.root(tuple(root))
                if root is None:
                    raise ValueError("arrow key root is not a root")
            if not isinstance(mat, Matrix):
                mat = Matrix(mat)
            if not mat.is_zero():
                self.arrows[(tuple(src), root)] = mat

    def __eq__(self, other):
        return (
            isinstance(other, QuiverRep)
            and self.geometry == other.geometry
            and self.support == other.support
            and self.arrows == other.arrows
        )

    def __repr__(self):
        return (
            f"QuiverRep({self.geometry.root_system.cartan_type}, "
            f"levi={list(self.geometry.levi)}, |support|={len(self.support)}, "
            f"|arrows|={len(self.arrows)})"
        )

    def dim(self, lam: Weight) -> int:
        return self.support.get(tuple(lam), 0)

    @property
    def rank(self) -> int:
        return sum(self.support.values())

    def arrow(self, src: Weight, root: Root) -> Matrix:
        """Arrow matrix from src in direction root; zero map when absent."""
        tgt = tuple(a - b for a, b in zip(src, root.fund))
        mat = self.arrows.get((tuple(src), root))
        if mat is None:
            return Matrix.zeros(self.dim(tgt), self.dim(src))
        return mat

    def path_matrix(self, src: Weight, roots) -> Matrix:
        """Composition of arrows from src in the given root order."""
        mat = Matrix.identity(self.dim(src))
        cur = tuple(src)
        for root in roots:
            mat = self.arrow(cur, root) @ mat
            cur = tuple(a - b for a, b in zip(cur, root.fund))
        return mat


def validate(rep: QuiverRep) -> list:
    """Structural errors of a representation (empty list = ok)."""
    geom = rep.geometry
    errors = []
    for lam, d in rep.support.items():
        if len(lam) != geom.root_system.rank:
            errors.append(f"vertex {lam}: wrong coordinate length")
            continue
        if d <= 0:
            errors.append(f"vertex {lam}: non-positive dimension {d}")
        if not geom.is_p_dominant(lam):
            errors.append(f"vertex {lam}: not p-dominant for levi {list(geom.levi)}")
    if errors:
        return errors
    for (src, root), mat in rep.arrows.items():
        tgt = tuple(a - b for a, b in zip(src, root.fund))
        if src not in rep.support:
            errors.append(f"arrow {src} -{root.simple}->: source not in support")
            continue
        if tgt not in rep.support:
            errors.append(f"arrow {src} -{root.simple}->: target {tgt} not in support")
            continue
        if root not in geom.nilradical_roots:
            errors.append(f"arrow {src} -{root.simple}->: not a nilradical root")
            continue
        if arrow_multiplicity(geom, src, tgt) != 1:
            errors.append(f"arrow {src} -{root.simple}->: no quiver arrow here")
            continue
        if (mat.rows, mat.cols) != (rep.support[tgt], rep.support[src]):
            errors.append(
                f"arrow {src} -{root.simple}->: matrix is {mat.rows}x{mat.cols}, "
                f"expected {rep.support[tgt]}x{rep.support[src]}"
            )
    return errors


def _residual(rep: QuiverRep, inst: RelationInstance) -> Matrix:
    """Relation residual at an instance; the relation holds iff it is zero.

    With arrows recording the action of the negative-root generators, the
    bracket identity reads: (path gamma then beta) - (path beta then gamma)
    = N(-beta,-gamma) * (direct arrow for beta+gamma).
    """
    lam = inst.source
    beta, gamma = inst.beta, inst.gamma
    m_gb = rep.path_matrix(lam, (gamma, beta))
    m_bg = rep.path_matrix(lam, (beta, gamma))
    res = m_gb - m_bg
    if inst.coefficient:
        delta = rep.geometry.root_system.root(
            tuple(a + b for a, b in zip(beta.simple, gamma.simple))
        )
        res = res - rep.arrow(lam, delta).scale(inst.coefficient)
    return res


def check_relations(rep: QuiverRep) -> list:
    """Violated relation instances of a Borel representation (empty = ok)."""
    geom = rep.geometry
    if not geom.is_borel:
        raise ValueError("relations are only known for the Borel parabolic")
    violated = []
    for inst in borel_relation_instances(geom, rep.support):
        end = tuple(
            a - b - c
            for a, b, c in zip(inst.source, inst.beta.fund, inst.gamma.fund)
        )
        if rep.dim(inst.source) == 0 or rep.dim(end) == 0:
            continue  # residual lands in a zero space
        if not _residual(rep, inst).is_zero():
            violated.append(inst)
    return violated


def solve_derived_arrows(rep: QuiverRep) -> QuiverRep:
    """Complete generating-arrow data to a full Borel representation.

    Derived arrows are computed by increasing root height from bracket
    decompositions of their directions; afterwards every relation instance
    is checked, and a RelationError carrying the violated instances is
    raised when no consistent completion exists.  Non-generating arrows
    present in the input are ignored and recomputed.
    """
    geom = rep.geometry
    if not geom.is_borel:
        raise ValueError("solve_derived_arrows needs the Borel parabolic")
    rs = geom.root_system
    simples = set(rs.positive_roots[: rs.rank])
    arrows = {
        key: mat for key, mat in rep.arrows.items() if key[1] in simples
    }
    work = QuiverRep(geom, rep.support, arrows)
    for delta in rs.positive_roots:
        if delta.height < 2:
            continue
        decomposition = next(
            (b, g)
            for i, b in enumerate(rs.positive_roots)
            for g in rs.positive_roots[i + 1:]
            if tuple(x + y for x, y in zip(b.simple, g.simple)) == delta.simple
        )
        beta, gamma = decomposition
        n = rs.chevalley(-beta, -gamma)
        for lam in sorted(rep.support):
            tgt = tuple(a - b for a, b in zip(lam, delta.fund))
            if tgt not in rep.support:
                continue
            m_gb = work.path_matrix(lam, (gamma, beta))
            m_bg = work.path_matrix(lam, (beta, gamma))
            mat = (m_gb - m_bg).scale(Fraction(1, n))
            if not mat.is_zero():
                work.arrows[(lam, delta)] = mat
    violated = check_relations(work)
    if violated:
        raise RelationError(violated)
    return work


# ----- builders ---------------------------------------------------------------


def irreducible(geom: ParabolicGeometry, lam: Weight) -> QuiverRep:
    """The irreducible bundle labeled by a single p-dominant weight."""
    lam = tuple(lam)
    if not geom.is_p_dominant(lam):
        raise ValueError(f"{lam} is not p-dominant")
    return QuiverRep(geom, {lam: 1})


def line_bundle(geom: ParabolicGeometry, coords) -> QuiverRep:
    """Line bundle on the full flag variety, by fundamental coordinates."""
    if not geom.is_borel:
        raise ValueError("line bundles by coordinates are a Borel-case builder")
    return irreducible(geom, tuple(coords))


def direct_sum(*reps: QuiverRep) -> QuiverRep:
    """Direct sum: block-diagonal arrows on the union of the supports."""
    if not reps:
        raise ValueError("empty direct sum")
    geom = reps[0].geometry
    if any(r.geometry != geom for r in reps):
        raise ValueError("direct summands live on different geometries")
    support = {}
    for r in reps:
        for lam, d in r.support.items():
            support[lam] = support.get(lam, 0) + d
    offsets = []
    running = {}
    for r in reps:
        offsets.append(dict(running))
        for lam, d in r.support.items():
            running[lam] = running.get(lam, 0) + d
    arrows = {}
    keys = sorted({k for r in reps for k in r.arrows})
    for src, root in keys:
        tgt = tuple(a - b for a, b in zip(src, root.fund))
        block = [
            [Fraction(0)] * support[src] for _ in range(support[tgt])
        ]
        for r, off in zip(reps, offsets):
            mat = r.arrows.get((src, root))
            if mat is None:
                continue
            ro = off.get(tgt, 0)
            co = off.get(src, 0)
            for i in range(mat.rows):
                for j in range(mat.cols):
                    block[ro + i][co + j] = mat.data[i][j]
        arrows[(src, root)] = Matrix(block, support[tgt], support[src])
    return QuiverRep(geom, support, arrows)


def cotangent(geom: ParabolicGeometry) -> QuiverRep:
    """Cotangent bundle of the full flag variety (Borel only).

    Graded pieces are the line bundles at the negated positive roots; the
    generating arrows are the adjoint-action brackets.
    """
    if not geom.is_borel:
        raise ValueError("cotangent builder requires the Borel parabolic")
    rs = geom.root_system
    support = {tuple(-c for c in beta.fund): 1 for beta in rs.positive_roots}
    arrows = {}
    for beta in rs.positive_roots:
        src = tuple(-c for c in beta.fund)
        for gamma in rs.positive_roots[: rs.rank]:
            total = tuple(a + b for a, b in zip(beta.simple, gamma.simple))
            if rs.is_root(total):
                arrows[(src, gamma)] = Matrix([[rs.chevalley(-gamma, -beta)]])
    return solve_derived_arrows(QuiverRep(geom, support, arrows))


def tangent(geom: ParabolicGeometry) -> QuiverRep:
    """Tangent bundle of the full flag variety (Borel only)."""
    if not geom.is_borel:
        raise ValueError("tangent builder requires the Borel parabolic")
    rs = geom.root_system
    support = {beta.fund: 1 for beta in rs.positive_roots}
    arrows = {}
    for beta in rs.positive_roots:
        for gamma in rs.positive_roots[: rs.rank]:
            diff = tuple(a - b for a, b in zip(beta.simple, gamma.simple))
            if rs.is_root(diff) and rs.root(diff).is_positive:
                arrows[(beta.fund, gamma)] = Matrix([[rs.chevalley(-gamma, beta)]])
    return solve_derived_arrows(QuiverRep(geom, support, arrows))


# ----- sub- and quotient representations ---------------------------------------


def _span_dict(rep: QuiverRep, seeds) -> dict:
    """Forward closure of the full seed spaces under arrow images."""
    seeds = {tuple(s) for s in seeds}
    if not seeds <= set(rep.support):
        raise ValueError("seed vertices must lie in the support")
    spans = {
        lam: (
            [tuple(Matrix.identity(d).column(j)) for j in range(d)]
            if lam in seeds
            else []
        )
        for lam, d in rep.support.items()
    }
    changed = True
    while changed:
        changed = False
        for (src, root), mat in rep.arrows.items():
            tgt = tuple(a - b for a, b in zip(src, root.fund))
            if not spans[src]:
                continue
            images = [
                tuple((mat @ Matrix([list(v)], 1, len(v)).transpose()).column(0))
                for v in spans[src]
            ]
            new = row_space_basis(spans[tgt] + images, rep.support[tgt])
            if len(new) != len(spans[tgt]):
                spans[tgt] = new
                changed = True
            else:
                spans[tgt] = new
    return spans


def _restrict_to_spans(rep: QuiverRep, spans: dict) -> QuiverRep:
    """Subrepresentation on arrow-invariant subspaces given by bases."""
    support = {lam: len(b) for lam, b in spans.items() if b}
    bases = {
        lam: Matrix.from_columns([list(v) for v in spans[lam]], rep.support[lam])
        for lam in support
    }
    arrows = {}
    for (src, root), mat in rep.arrows.items():
        tgt = tuple(a - b for a, b in zip(src, root.fund))
        if src not in support or tgt not in support:
            continue
        arrows[(src, root)] = solve_in_basis(bases[tgt], mat @ bases[src])
    return QuiverRep(rep.geometry, support, arrows)


def subrep_generated(rep: QuiverRep, seeds) -> QuiverRep:
    """Smallest subrepresentation containing the full spaces at the seeds."""
    return _restrict_to_spans(rep, _span_dict(rep, seeds))


def colon_quotient(rep: QuiverRep, seeds) -> QuiverRep:
    """Quotient by the largest subrepresentation whose every path image
    stays inside the seed spaces.

    The kernel is computed as a backward fixpoint of arrow preimages; the
    quotient representation acts on complement coordinates.
    """
    seeds = {tuple(s) for s in seeds}
    if not seeds <= set(rep.support):
        raise ValueError("seed vertices must lie in the support")
    spans = {
        lam: (
            [tuple(Matrix.identity(d).column(j)) for j in range(d)]
            if lam in seeds
            else []
        )
        for lam, d in rep.support.items()
    }
    changed = True
    while changed:
        changed = False
        for (src, root), mat in rep.arrows.items():
            tgt = tuple(a - b for a, b in zip(src, root.fund))
            pre = preimage_basis(mat, spans[tgt])
            if not spans[src]:
                continue
            new = span_intersection(spans[src], pre, rep.support[src])
            if len(new) != len(spans[src]):
                spans[src] = new
                changed = True
    # Quotient coordinates: extend each kernel basis by standard vectors.
    support = {}
    proj = {}
    sect = {}
    kernels = {}
    for lam, d in rep.support.items():
        kernel = spans[lam]
        kernels[lam] = kernel
        k = len(kernel)
        if k == d:
            continue
        cols = [list(v) for v in kernel]
        chosen = []
        for j in range(d):
            e = [Fraction(int(i == j)) for i in range(d)]
            trial = Matrix.from_columns(cols + [e] + [list(c) for c in chosen], d)
            if trial.rank() == len(cols) + len(chosen) + 1:
                chosen.append(e)
            if len(cols) + len(chosen) == d:
                break
        full = Matrix.from_columns(cols + chosen, d)
        inv = solve_in_basis(full, Matrix.identity(d))
        support[lam] = d - k
        # Rows of inv past the kernel block give quotient coordinates.
        proj[lam] = Matrix(inv.data[k:], d - k, d)
        sect[lam] = Matrix.from_columns(chosen, d)
    arrows = {}
    for (src, root), mat in rep.arrows.items():
        tgt = tuple(a - b for a, b in zip(src, root.fund))
        if src not in support or tgt not in support:
            continue
        if kernels[src]:
            kb = Matrix.from_columns([list(v) for v in kernels[src]], mat.cols)
            assert (proj[tgt] @ mat @ kb).is_zero(), "colon kernel is not arrow-invariant"
        arrows[(src, root)] = proj[tgt] @ mat @ sect[src]
    return QuiverRep(rep.geometry, support, arrows)


# ----- A_m-type support and Gabriel decomposition -------------------------------


@dataclass(frozen=True)
class AmPath:
    """Support along a single arrow direction, gaps allowed.

    ``vertices`` is the full chain from the top vertex down to the lowest
    supported one in steps of ``direction``; unsupported chain vertices
    have dimension zero.  A single-vertex support has direction None.
    """

    direction: Root | None
    vertices: tuple


@dataclass(frozen=True)
class GabrielDecomposition:
    """Interval decomposition of an A_m-type representation."""

    path: AmPath
    intervals: tuple  # ((start, end), multiplicity), 0-based inclusive positions


def is_am_type(rep: QuiverRep):
    """The chain structure of the support, or None if it is not a chain."""
    verts = sorted(rep.support)
    if not verts:
        return None
    if len(verts) == 1:
        return AmPath(None, (verts[0],))
    for beta in rep.geometry.nilradical_roots:
        top = max(verts, key=lambda v: sum(x * y for x, y in zip(v, beta.simple)))
        steps = {}
        ok = True
        for v in verts:
            diff = tuple(a - b for a, b in zip(top, v))
            qs = set()
            for d, b in zip(diff, beta.fund):
                if b == 0:
                    if d != 0:
                        qs.add(None)
                else:
                    qs.add(Fraction(d, b))
            if len(qs) != 1:
                ok = False
                break
            (q,) = qs
            if q is None or q.denominator != 1 or q < 0:
                ok = False
                break
            steps[int(q)] = v
        if ok:
            m = max(steps)
            chain = tuple(
                tuple(a - p * b for a, b in zip(top, beta.fund))
                for p in range(m + 1)
            )
            return AmPath(beta, chain)
    return None


def gabriel_decompose(rep: QuiverRep) -> GabrielDecomposition:
    """Interval multiplicities of an A_m-type representation.

    Computed by exact rank bookkeeping: the multiplicity of interval
    [i..j] is r(i,j) - r(i-1,j) - r(i,j+1) + r(i-1,j+1) where r is the
    rank of the composed map between chain positions.
    """
    path = is_am_type(rep)
    if path is None:
        raise ValueError("support is not of A_m type")
    chain = path.vertices
    m = len(chain)
    dims = [rep.dim(v) for v in chain]

    comp = {}
    for i in range(m):
        mat = Matrix.identity(dims[i])
        comp[(i, i)] = mat
        for j in range(i + 1, m):
            mat = rep.arrow(chain[j - 1], path.direction) @ mat
            comp[(i, j)] = mat

    def r(i, j):
        if i < 0 or j >= m or i > j:
            return 0
        return comp[(i, j)].rank()

    intervals = []
    for i in range(m):
        for j in range(i, m):
            mult = r(i, j) - r(i - 1, j) - r(i, j + 1) + r(i - 1, j + 1)
            assert mult >= 0
            if mult:
                intervals.append(((i, j), mult))
    # The interval indicators must add up to the dimension vector.
    for p in range(m):
        total = sum(mult for (i, j), mult in intervals if i <= p <= j)
        assert total == dims[p], "Gabriel multiplicities do not match dimensions"
    return GabrielDecomposition(path, tuple(intervals))
