"""Regenerate the JSON fixture corpus under fixtures/.

Consistent bundles are stored fully solved so that `check` and `h0`
work on them directly.  Deliberately inconsistent bundles (L_ell1,
B_s0/B_s1/B_s3) are stored with generating arrows only, since no
completion exists.  Run from the repository root:

    python3 tools/generate_fixtures.py
"""

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from homquiver import (
    QuiverRep,
    build_geometry,
    cotangent,
    rep_to_dict,
    save_rep,
    solve_derived_arrows,
    tangent,
)
from homquiver.linalg import Matrix

OUT = pathlib.Path(__file__).resolve().parents[1] / "fixtures"


def scalar(v):
    return Matrix([[v]])


def main():
    OUT.mkdir(exist_ok=True)
    geom = build_geometry("A2", ())
    rs = geom.root_system
    a1, a2 = rs.simple_root(1), rs.simple_root(2)

    # Rank 3 iterated extension O(-3,0) -> A -> A1 with both constants 1.
    bundle_a = QuiverRep(
        geom,
        {(-2, 1): 1, (-1, -1): 1, (-3, 0): 1},
        {((-2, 1), a2): scalar(1), ((-1, -1), a1): scalar(1)},
    )
    save_rep(solve_derived_arrows(bundle_a), OUT / "A.json")

    # A extended by the trivial bundle, constant ell on the new arrow.
    def bundle_l(ell):
        return QuiverRep(
            geom,
            {(0, 0): 1, (-2, 1): 1, (-1, -1): 1, (-3, 0): 1},
            {
                ((0, 0), a1): scalar(ell),
                ((-2, 1), a2): scalar(1),
                ((-1, -1), a1): scalar(1),
            },
        )

    save_rep(solve_derived_arrows(bundle_l(0)), OUT / "L_ell0.json")
    save_rep(bundle_l(1), OUT / "L_ell1.json")

    # B_{s,1} together with the trivial extension vertex, f = 1.  Only
    # s = 2 admits a consistent completion.
    def bundle_b(s):
        return QuiverRep(
            geom,
            {(0, 0): 1, (-2, 1): 1, (-1, -1): 1, (-3, 0): 1, (-4, 2): 1},
            {
                ((0, 0), a1): scalar(1),
                ((-2, 1), a1): scalar(s),
                ((-2, 1), a2): scalar(1),
                ((-1, -1), a1): scalar(1),
                ((-4, 2), a2): scalar(1),
            },
        )

    for s in (0, 1, 3):
        save_rep(bundle_b(s), OUT / f"B_s{s}.json")
    solved = solve_derived_arrows(bundle_b(2))
    save_rep(solved, OUT / "B_s2.json")
    save_rep(solved, OUT / "F.json")

    save_rep(tangent(geom), OUT / "tangent_A2.json")
    save_rep(cotangent(geom), OUT / "cotangent_A2.json")
    print(f"wrote {len(list(OUT.glob('*.json')))} fixtures to {OUT}")


if __name__ == "__main__":
    main()
