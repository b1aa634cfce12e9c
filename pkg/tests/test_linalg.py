import random
from fractions import Fraction

import pytest

from homquiver.linalg import (
    Matrix,
    preimage_basis,
    row_space_basis,
    solve_in_basis,
    span_contains,
    span_intersection,
)


def rand_matrix(rng, rows, cols, den=3):
    return Matrix(
        [
            [Fraction(rng.randint(-4, 4), rng.randint(1, den)) for _ in range(cols)]
            for _ in range(rows)
        ],
        rows,
        cols,
    )


def test_shape_and_immutability():
    m = Matrix([[1, 2], [3, 4]])
    assert (m.rows, m.cols) == (2, 2)
    with pytest.raises(AttributeError):
        m.rows = 3
    with pytest.raises(ValueError):
        Matrix([[1, 2], [3]])


def test_zero_dimensional_shapes():
    a = Matrix.zeros(0, 3)
    b = Matrix.zeros(3, 0)
    assert (a @ a.transpose()).rows == 0
    assert (b @ a).rows == 3 and (b @ a).cols == 3
    assert (b @ a).is_zero()
    assert a.rank() == 0
    assert a.nullity() == 3
    assert b.nullity() == 0


def test_matmul_identity_and_associativity():
    rng = random.Random(7)
    for _ in range(20):
        a = rand_matrix(rng, 3, 4)
        b = rand_matrix(rng, 4, 2)
        c = rand_matrix(rng, 2, 5)
        assert (a @ b) @ c == a @ (b @ c)
        assert Matrix.identity(3) @ a == a


def test_rank_agrees_with_rref():
    rng = random.Random(11)
    for _ in range(30):
        m = rand_matrix(rng, rng.randint(1, 5), rng.randint(1, 5))
        rr, pivots = m.rref()
        assert m.rank() == len(pivots)


def test_nullspace_is_exact_kernel():
    rng = random.Random(13)
    for _ in range(30):
        m = rand_matrix(rng, rng.randint(1, 4), rng.randint(1, 5))
        basis = m.nullspace()
        assert len(basis) == m.cols - m.rank()
        for v in basis:
            col = Matrix.from_columns([list(v)], m.cols)
            assert (m @ col).is_zero()


def test_rank_nullity_on_singular_example():
    m = Matrix([[1, 2, 3], [2, 4, 6], [0, 0, 1]])
    assert m.rank() == 2
    assert m.nullity() == 1


def test_span_helpers():
    v1 = (Fraction(1), Fraction(0), Fraction(1))
    v2 = (Fraction(0), Fraction(1), Fraction(1))
    basis = row_space_basis([v1, v2, tuple(a + b for a, b in zip(v1, v2))], 3)
    assert len(basis) == 2
    assert span_contains(basis, v1)
    assert not span_contains(basis, (Fraction(1), Fraction(0), Fraction(0)))


def test_span_intersection():
    e1 = (Fraction(1), Fraction(0), Fraction(0))
    e2 = (Fraction(0), Fraction(1), Fraction(0))
    e3 = (Fraction(0), Fraction(0), Fraction(1))
    meet = span_intersection([e1, e2], [e2, e3], 3)
    assert len(meet) == 1
    assert span_contains([e2], meet[0])


def test_preimage_basis():
    # projection onto first coordinate of a 2-space
    m = Matrix([[1, 0]])
    pre = preimage_basis(m, [])
    assert len(pre) == 1 and span_contains([(Fraction(0), Fraction(1))], pre[0])
    full = preimage_basis(m, [(Fraction(1),)])
    assert len(full) == 2


def test_solve_in_basis_round_trip():
    rng = random.Random(17)
    for _ in range(10):
        basis = rand_matrix(rng, 4, 4)
        if basis.rank() < 4:
            continue
        target = rand_matrix(rng, 4, 2)
        coords = solve_in_basis(basis, target)
        assert basis @ coords == target
