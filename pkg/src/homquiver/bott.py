"""Dot action of the Weyl group and the cohomology of irreducible bundles.

An irreducible homogeneous bundle labeled by a p-dominant weight has
cohomology in at most one degree: translate lam + rho to the dominant
chamber counting reflections, or detect that it sits on a wall.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .rootsystem import RootSystem, Weight


@dataclass(frozen=True)
class BottResult:
    """Outcome of Bott's algorithm: singular, or one cohomology degree.

    ``degree`` is the reflection length, ``weight`` the dominant weight
    labeling the cohomology module, ``dimension`` its Weyl dimension.
    """

    degree: int | None = None
    weight: Weight | None = None
    dimension: int | None = None

    @property
    def is_singular(self) -> bool:
        return self.degree is None


SINGULAR = BottResult()


def _sub_positive_roots(rs: RootSystem, indices: frozenset):
    return tuple(
        r for r in rs.positive_roots
        if all(c == 0 or (j + 1) in indices for j, c in enumerate(r.simple))
    )


_sub_positive_roots = lru_cache(maxsize=None)(_sub_positive_roots)


def dominantize(rs: RootSystem, v: Weight, indices=None):
    """Translate v to the (sub-)dominant chamber by simple reflections.

    ``indices`` restricts to the sub-root-system spanned by the given
    1-based simple indices (the whole system when omitted).  Returns None
    when v is singular for that sub-system, else ``(length, dominant)``.
    The reflection count is cross-checked against the number of positive
    roots pairing negatively with v; the two must always agree.
    """
    if indices is None:
        indices = range(1, rs.rank + 1)
    indices = tuple(sorted(set(indices)))
    pos = _sub_positive_roots(rs, frozenset(indices))
    inners = [rs.inner(v, a) for a in pos]
    if any(c == 0 for c in inners):
        return None
    negative_count = sum(1 for c in inners if c < 0)
    w = tuple(v)
    length = 0
    while True:
        i = next((i for i in indices if w[i - 1] < 0), None)
        if i is None:
            break
        w = rs.simple_reflect(w, i)
        length += 1
    assert length == negative_count, "reflection count disagrees with inversion count"
    return length, w


def weyl_dim(rs: RootSystem, nu: Weight) -> int:
    """Weyl dimension formula, in exact integer arithmetic."""
    if any(c < 0 for c in nu):
        raise ValueError(f"{nu} is not dominant")
    num = 1
    den = 1
    shifted = tuple(c + 1 for c in nu)
    for alpha in rs.positive_roots:
        num *= rs.inner(shifted, alpha)
        den *= alpha.height  # (rho, alpha)
    q, r = divmod(num, den)
    assert r == 0
    return q


def bott(geom, lam: Weight) -> BottResult:
    """Bott's algorithm for the irreducible bundle labeled by lam.

    lam must be p-dominant for the geometry.  The result reports the
    dominant weight labeling the cohomology module; dual-module
    bookkeeping is dropped since dimensions and multiplicities are
    dual-invariant.
    """
    rs = geom.root_system
    if not geom.is_p_dominant(lam):
        raise ValueError(f"{lam} is not p-dominant for levi {geom.levi}")
    shifted = tuple(c + 1 for c in lam)
    res = dominantize(rs, shifted)
    if res is None:
        return SINGULAR
    length, w = res
    nu = tuple(c - 1 for c in w)
    return BottResult(length, nu, weyl_dim(rs, nu))
