from __future__ import annotations

import random
from fractions import Fraction

import pytest

from homleibniz.linalg.eigen import rational_eigenvalues, simultaneous_eigenspaces
from homleibniz.linalg.matrix import (
    DimensionMismatchError,
    Matrix,
    SingularMatrixError,
    rref,
    vector,
)
from homleibniz.linalg.subspace import (
    Subspace,
    contains,
    kernel,
    solve_coordinates,
    subspace_intersect,
    subspace_sum,
)


def _random_span(rng: random.Random, ambient_dim: int) -> Subspace:
    count = rng.randint(0, ambient_dim)
    vectors = [
        vector(rng.randint(-2, 2) for _ in range(ambient_dim)) for _ in range(count)
    ]
    return Subspace.span(vectors, ambient_dim)


@pytest.mark.parametrize(
    ("rows", "expected", "pivots"),
    [
        ([[2, 4], [1, 2]], [[1, 2], [0, 0]], (0,)),
        ([[1, 0, 0], [0, 1, 0], [0, 0, 1]], [[1, 0, 0], [0, 1, 0], [0, 0, 1]], (0, 1, 2)),
        ([[0, 0, 0], [0, 0, 0]], [[0, 0, 0], [0, 0, 0]], ()),
        ([[0, 3, 6], [1, 1, 1]], [[1, 0, -1], [0, 1, 2]], (0, 1)),
    ],
)
def test_rref_examples(
    rows: list[list[int]], expected: list[list[int]], pivots: tuple[int, ...]
) -> None:
    reduced, found = rref(Matrix.from_rows(rows))
    assert reduced == Matrix.from_rows(expected)
    assert found == pivots


def test_rref_is_idempotent() -> None:
    rng = random.Random(31)
    for _ in range(20):
        m = Matrix.from_rows([[rng.randint(-3, 3) for _ in range(4)] for _ in range(3)])
        reduced, pivots = rref(m)
        assert rref(reduced) == (reduced, pivots)
        assert len(pivots) == m.rank()


def test_kernel_of_identity_and_zero() -> None:
    assert kernel(Matrix.identity(3)).is_zero
    assert kernel(Matrix.zeros(3, 3)).is_full


def test_sum_and_intersection_dimensions_balance() -> None:
    rng = random.Random(2024)
    for _ in range(30):
        a, b = _random_span(rng, 4), _random_span(rng, 4)
        assert (a + b).dim + a.intersect(b).dim == a.dim + b.dim
        assert (a + b).contains(a) and (a + b).contains(b)
        assert a.contains(a.intersect(b)) and b.contains(a.intersect(b))


def test_subspace_equality_is_canonical() -> None:
    first = Subspace.span([vector([2, 2, 0]), vector([0, 1, 1])], 3)
    second = Subspace.span([vector([1, 0, -1]), vector([1, 1, 0])], 3)
    assert first == second
    assert first.dim == 2
    assert first.pivots == (0, 1)


def test_subspace_sum_and_intersection() -> None:
    xy = Subspace.coordinate([0, 1], 3)
    yz = Subspace.coordinate([1, 2], 3)
    assert (xy + yz).is_full
    assert xy.intersect(yz) == Subspace.coordinate([1], 3)
    assert xy.intersect(Subspace.zero(3)).is_zero


def test_functional_forms_agree_with_methods() -> None:
    xy = Subspace.coordinate([0, 1], 3)
    diagonal = Subspace.span([vector([1, 1, 1])], 3)
    assert subspace_sum(xy, diagonal) == xy + diagonal
    assert subspace_intersect(xy, diagonal).is_zero
    assert contains(subspace_sum(xy, diagonal), vector([0, 0, 5]))
    assert contains(xy, Subspace.coordinate([1], 3))
    assert not contains(xy, diagonal)


def test_subspace_reduce_is_zero_only_inside() -> None:
    plane = Subspace.span([vector([1, 1, 0])], 3)
    assert plane.contains(vector([3, 3, 0]))
    assert any(plane.reduce(vector([1, 0, 0])))


def test_subspace_rejects_wrong_ambient_dimension() -> None:
    with pytest.raises(DimensionMismatchError):
        Subspace.coordinate([0], 2) + Subspace.coordinate([0], 3)


def test_kernel_of_row_vector() -> None:
    m = Matrix.from_rows([[1, 1]])
    assert kernel(m) == Subspace.span([vector([1, -1])], 2)


def test_complement_from_keeps_candidate_order() -> None:
    line = Subspace.coordinate([0], 3)
    candidates = [vector([1, 0, 0]), vector([1, 1, 0]), vector([0, 2, 0]), vector([0, 0, 1])]
    complement = line.complement_from(candidates)
    assert complement == Subspace.span([vector([1, 1, 0]), vector([0, 0, 1])], 3)
    assert (line + complement).is_full


def test_solve_coordinates() -> None:
    basis = [vector([1, 0, 1]), vector([0, 1, 1])]
    assert solve_coordinates(basis, vector([2, 3, 5])) == (2, 3)
    assert solve_coordinates(basis, vector([0, 0, 1])) is None


def test_inverse_and_power_are_exact() -> None:
    m = Matrix.from_rows([[1, 2], [3, 4]])
    assert m.inverse() == Matrix.from_rows([[-2, 1], ["3/2", "-1/2"]])
    assert m @ m.inverse() == Matrix.identity(2)
    assert Matrix.diagonal([2, 3]).power(-1) == Matrix.diagonal(["1/2", "1/3"])
    assert Matrix.diagonal([2, 3]).power(0) == Matrix.identity(2)


def test_inverse_of_singular_matrix_raises() -> None:
    with pytest.raises(SingularMatrixError):
        Matrix.from_rows([[1, 2], [2, 4]]).inverse()


def test_rational_eigenvalues_skip_irrational_roots() -> None:
    assert rational_eigenvalues(Matrix.from_rows([[0, -1], [1, 0]])) == []
    assert rational_eigenvalues(Matrix.from_rows([[2, 1], [0, 2]])) == [(Fraction(2), 2)]
    assert rational_eigenvalues(Matrix.diagonal([1, 2, "1/2"])) == [
        (Fraction(1, 2), 1),
        (Fraction(1), 1),
        (Fraction(2), 1),
    ]


@pytest.mark.parametrize(
    ("rows", "expected"),
    [
        ([[0, 1], [1, 0]], [(Fraction(-1), 1), (Fraction(1), 1)]),
        ([[2, 0], [0, -2]], [(Fraction(-2), 1), (Fraction(2), 1)]),
    ],
)
def test_rational_eigenvalues_of_small_matrices(
    rows: list[list[int]], expected: list[tuple[Fraction, int]]
) -> None:
    assert rational_eigenvalues(Matrix.from_rows(rows)) == expected


def test_simultaneous_eigenvectors_satisfy_every_operator() -> None:
    swap = Matrix.from_rows([[0, 1, 0], [1, 0, 0], [0, 0, 2]])
    scale = Matrix.diagonal([1, 1, 3])
    ops = [swap, scale]
    pieces = simultaneous_eigenspaces(ops, 3)

    assert [values for values, _ in pieces] == [(-1, 1), (1, 1), (2, 3)]
    for values, piece in pieces:
        for w in piece.basis:
            for op, value in zip(ops, values):
                assert op.apply(w) == tuple(value * x for x in w)
    assert sum(piece.dim for _, piece in pieces) == 3


def test_simultaneous_eigenspaces_without_operators() -> None:
    assert simultaneous_eigenspaces([], 3) == [((), Subspace.full(3))]


def test_simultaneous_eigenspaces_refine_in_order() -> None:
    ops = [Matrix.diagonal([1, 1, 2]), Matrix.diagonal([3, 4, 4])]
    pieces = simultaneous_eigenspaces(ops, 3)
    assert [values for values, _ in pieces] == [(1, 3), (1, 4), (2, 4)]
    assert [piece for _, piece in pieces] == [
        Subspace.coordinate([0], 3),
        Subspace.coordinate([1], 3),
        Subspace.coordinate([2], 3),
    ]


def test_simultaneous_eigenspaces_rejects_wrong_shape() -> None:
    with pytest.raises(DimensionMismatchError):
        simultaneous_eigenspaces([Matrix.identity(2)], 3)
