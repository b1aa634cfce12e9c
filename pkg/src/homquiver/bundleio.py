"""Bundle description files: JSON serialization of quiver representations.

Schema (all keys required except "levi" and "arrows"):

    {
      "algebra": "A2",
      "levi": [2],
      "vertices": [{"weight": [0, 0], "dim": 1}, ...],
      "arrows": [{"from": [0, 0], "root": [1, 0], "matrix": [["1", "-2/3"]]}, ...]
    }

"root" is in simple-root coordinates; matrix entries are decimal-integer
or "p/q" strings, row count = target dimension, column count = source
dimension.  Unknown keys are rejected.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .bundle import QuiverRep
from .geometry import build_geometry
from .linalg import Matrix


class BundleFormatError(ValueError):
    pass


def _check_keys(obj: dict, allowed: set, required: set, where: str):
    unknown = set(obj) - allowed
    if unknown:
        raise BundleFormatError(f"unknown key(s) {sorted(unknown)} in {where}")
    missing = required - set(obj)
    if missing:
        raise BundleFormatError(f"missing key(s) {sorted(missing)} in {where}")


def _int_vector(value, where: str) -> tuple:
    if not isinstance(value, list) or not all(isinstance(x, int) for x in value):
        raise BundleFormatError(f"{where} must be a list of integers")
    return tuple(value)


def _entry(value, where: str) -> Fraction:
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise BundleFormatError(f"bad rational {value!r} in {where}") from exc
    raise BundleFormatError(f"matrix entry in {where} must be an integer or string")


def rep_from_dict(doc: dict) -> QuiverRep:
    if not isinstance(doc, dict):
        raise BundleFormatError("bundle document must be a JSON object")
    _check_keys(doc, {"algebra", "levi", "vertices", "arrows"},
                {"algebra", "vertices"}, "bundle document")
    algebra = doc["algebra"]
    if not isinstance(algebra, str):
        raise BundleFormatError('"algebra" must be a string such as "A2"')
    levi = doc.get("levi", [])
    if not isinstance(levi, list) or not all(isinstance(i, int) for i in levi):
        raise BundleFormatError('"levi" must be a list of integers')
    try:
        geom = build_geometry(algebra, levi)
    except ValueError as exc:
        raise BundleFormatError(str(exc)) from exc

    support = {}
    for v in doc["vertices"]:
        if not isinstance(v, dict):
            raise BundleFormatError("vertex entries must be objects")
        _check_keys(v, {"weight", "dim"}, {"weight", "dim"}, "vertex entry")
        w = _int_vector(v["weight"], '"weight"')
        if not isinstance(v["dim"], int) or v["dim"] <= 0:
            raise BundleFormatError(f'"dim" of vertex {list(w)} must be a positive integer')
        if w in support:
            raise BundleFormatError(f"duplicate vertex {list(w)}")
        support[w] = v["dim"]

    arrows = {}
    for a in doc.get("arrows", []):
        if not isinstance(a, dict):
            raise BundleFormatError("arrow entries must be objects")
        _check_keys(a, {"from", "root", "matrix"}, {"from", "root", "matrix"},
                    "arrow entry")
        src = _int_vector(a["from"], '"from"')
        root_simple = _int_vector(a["root"], '"root"')
        root = geom.root_system.root(root_simple)
        if root is None:
            raise BundleFormatError(f"{list(root_simple)} is not a root of {algebra}")
        if not isinstance(a["matrix"], list) or not all(
            isinstance(r, list) for r in a["matrix"]
        ):
            raise BundleFormatError('"matrix" must be a list of rows')
        tgt = tuple(x - y for x, y in zip(src, root.fund))
        if src not in support:
            raise BundleFormatError(f"arrow source {list(src)} is not a vertex")
        if tgt not in support:
            raise BundleFormatError(
                f"arrow target {list(tgt)} (from {list(src)}, root "
                f"{list(root_simple)}) is not a vertex"
            )
        rows = support[tgt]
        cols = support[src]
        data = [
            [_entry(x, f"arrow {list(src)} -> {list(tgt)}") for x in r]
            for r in a["matrix"]
        ]
        mat = Matrix(data, len(data), len(data[0]) if data else cols)
        if (mat.rows, mat.cols) != (rows, cols):
            raise BundleFormatError(
                f"arrow {list(src)} -> {list(tgt)}: matrix is {mat.rows}x{mat.cols}, "
                f"expected {rows}x{cols}"
            )
        if (src, root) in arrows:
            raise BundleFormatError(f"duplicate arrow at {list(src)}, root {list(root_simple)}")
        arrows[(src, root)] = mat
    return QuiverRep(geom, support, arrows)


def rep_to_dict(rep: QuiverRep) -> dict:
    """Canonical JSON document: sorted vertices and arrows, rationals in
    lowest terms as strings."""
    geom = rep.geometry
    doc = {
        "algebra": str(geom.root_system.cartan_type),
        "levi": list(geom.levi),
        "vertices": [
            {"weight": list(w), "dim": d} for w, d in sorted(rep.support.items())
        ],
        "arrows": [
            {
                "from": list(src),
                "root": list(root.simple),
                "matrix": [[str(x) for x in row] for row in mat.data],
            }
            for (src, root), mat in sorted(
                rep.arrows.items(), key=lambda kv: (kv[0][0], kv[0][1].simple)
            )
        ],
    }
    return doc


def load_rep(path) -> QuiverRep:
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise BundleFormatError(f"{path}: {exc}") from exc
    return rep_from_dict(doc)


def save_rep(rep: QuiverRep, path):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(rep_to_dict(rep), fh, indent=2)
        fh.write("\n")
