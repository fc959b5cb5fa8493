from __future__ import annotations

import random

import pytest

from homleibniz.algebra.ideals import (
    JNotLeftCentralError,
    annihilator,
    compute_J,
    derived,
    ideal_closure,
    is_ideal,
)
from homleibniz.algebra.model import HomAlgebra
from homleibniz.linalg.matrix import vector
from homleibniz.linalg.subspace import Subspace
from homleibniz.loaders.algebra_loader import ParsedAlgebra


def test_j_vanishes_on_lie_algebras(sl2: ParsedAlgebra, d6: ParsedAlgebra) -> None:
    assert compute_J(sl2.algebra).is_zero
    assert compute_J(d6.algebra).is_zero


def test_j_of_sl2v1_is_the_module(sl2v1: ParsedAlgebra) -> None:
    j_ideal = compute_J(sl2v1.algebra)
    assert j_ideal == Subspace.coordinate([3, 4], 5)
    assert is_ideal(sl2v1.algebra, j_ideal)


def test_j_of_lb2(lb2: ParsedAlgebra) -> None:
    assert compute_J(lb2.algebra) == Subspace.coordinate([0], 2)
    assert annihilator(lb2.algebra) == Subspace.coordinate([0], 2)


def test_j_requires_left_centrality() -> None:
    algebra = HomAlgebra.from_table("idempotent", 1, {(0, 0): {0: 1}})
    with pytest.raises(JNotLeftCentralError) as exc:
        compute_J(algebra)
    assert "[L, J] ≠ 0" in str(exc.value)


def test_zero_product_algebra(a0: ParsedAlgebra) -> None:
    assert a0.algebra.is_zero_product
    assert compute_J(a0.algebra).is_zero
    assert annihilator(a0.algebra).is_full
    assert derived(a0.algebra).is_zero


def test_ideal_closure_of_a_root_space(sl2: ParsedAlgebra, d6: ParsedAlgebra) -> None:
    assert ideal_closure(sl2.algebra, Subspace.coordinate([1], 3)).is_full
    assert ideal_closure(d6.algebra, Subspace.coordinate([1], 6)) == Subspace.coordinate(
        [0, 1, 2], 6
    )


def test_perfect_algebras(sl2: ParsedAlgebra, sl2v1: ParsedAlgebra) -> None:
    assert derived(sl2.algebra).is_full
    assert derived(sl2v1.algebra).is_full
    assert annihilator(sl2v1.algebra).is_zero


@pytest.mark.parametrize(
    "name", ["a0", "sl2", "sl2c", "lb2", "sl2v1", "d6", "sl2_mixed", "sl2v1x2"]
)
def test_ideal_closure_is_a_closure_operator(
    name: str, request: pytest.FixtureRequest
) -> None:
    algebra: HomAlgebra = request.getfixturevalue(name).algebra
    n = algebra.dim
    rng = random.Random(97)

    def random_seed() -> Subspace:
        vectors = [
            vector(rng.randint(-2, 2) if rng.random() < 0.4 else 0 for _ in range(n))
            for _ in range(rng.randint(1, 2))
        ]
        return Subspace.span(vectors, n)

    for _ in range(10):
        small = random_seed()
        large = small + random_seed()
        closed = ideal_closure(algebra, small)

        assert closed.contains(small)
        assert ideal_closure(algebra, closed) == closed
        assert ideal_closure(algebra, large).contains(closed)
