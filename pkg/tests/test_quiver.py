import pytest

from homquiver.geometry import build_geometry
from homquiver.quiver import (
    DERIVED,
    GENERATING,
    arrows_from,
    borel_relation_instances,
    is_vertex,
    quiver_window,
)


def test_borel_every_weight_is_vertex():
    g = build_geometry("A2", ())
    assert is_vertex(g, (-7, 3))
    assert is_vertex(g, (0, 0))


def test_parabolic_vertices_are_p_dominant():
    g = build_geometry("A2", (2,))
    assert is_vertex(g, (-5, 2))
    assert not is_vertex(g, (0, -1))


def test_arrows_from_borel_a2():
    g = build_geometry("A2", ())
    arrows = arrows_from(g, (0, 0))
    targets = {a.target: a.kind for a in arrows}
    assert targets == {
        (-2, 1): GENERATING,
        (1, -2): GENERATING,
        (-1, -1): DERIVED,
    }


def test_arrows_respect_p_dominance():
    g = build_geometry("A2", (2,))
    arrows = arrows_from(g, (0, 0))
    # (-1,-1) fails p-dominance, so only the simple e1 direction remains
    assert {a.target for a in arrows} == {(-2, 1)}
    assert all(a.kind == GENERATING for a in arrows)


def test_window_contains_flag_threefold_subquiver():
    g = build_geometry("A2", ())
    w = quiver_window(g, (0, 0), 2)
    assert set(w.vertices) >= {(0, 0), (-2, 1), (-1, -1), (1, -2), (-3, 0)}
    pairs = {(a.source, a.target) for a in w.arrows}
    assert ((0, 0), (-2, 1)) in pairs
    assert ((-2, 1), (-1, -1)) in pairs
    assert ((-1, -1), (-3, 0)) in pairs
    assert ((-2, 1), (-3, 0)) in pairs  # derived diagonal
    kinds = {(a.source, a.target): a.kind for a in w.arrows}
    assert kinds[((-2, 1), (-3, 0))] == DERIVED


def test_window_radius_zero():
    g = build_geometry("A2", ())
    w = quiver_window(g, (0, 0), 0)
    assert w.vertices == ((0, 0),)
    assert w.arrows == ()


def test_window_requires_vertex_center():
    g = build_geometry("A2", (2,))
    with pytest.raises(ValueError):
        quiver_window(g, (0, -1), 1)


def test_relation_instances_cover_window():
    g = build_geometry("A2", ())
    support = {(0, 0), (-2, 1), (-1, -1), (-3, 0)}
    insts = borel_relation_instances(g, support)
    sources = {i.source for i in insts}
    assert (0, 0) in sources and (-2, 1) in sources
    for i in insts:
        # beta < gamma in the fixed root order, distinct roots
        assert i.beta.simple != i.gamma.simple
        total = tuple(x + y for x, y in zip(i.beta.simple, i.gamma.simple))
        if g.root_system.is_root(total):
            assert i.coefficient != 0
        else:
            assert i.coefficient == 0


def test_relation_instances_borel_only():
    g = build_geometry("A2", (2,))
    with pytest.raises(ValueError):
        borel_relation_instances(g, {(0, 0)})
