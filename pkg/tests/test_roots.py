from __future__ import annotations

from fractions import Fraction
from pathlib import Path

import pytest

from homleibniz.algebra.constructions import yau_twist
from homleibniz.algebra.model import HomAlgebra
from homleibniz.corpus import sl2_twist_family
from homleibniz.errors import InternalInconsistencyError
from homleibniz.linalg.matrix import Matrix, unit_vector
from homleibniz.linalg.subspace import Subspace
from homleibniz.loaders.algebra_loader import ParsedAlgebra, load_psi
from homleibniz.roots.decomposition import (
    DecompositionError,
    HNotMaximalError,
    NotAbelianError,
    NotPhiStableError,
    NotSeparableError,
    NotSplitError,
    Root,
    RootNotInLambdaError,
    decompose,
    evaluate,
    find_separating_element,
    is_symmetric,
    root_orbit,
    root_phi_pow,
    verify_split,
)
from homleibniz.roots.semidirect_weights import HEmbedding, check_semidirect_weights


def test_sl2_roots(sl2: ParsedAlgebra) -> None:
    decomposition = decompose(*sl2)
    assert decomposition.roots == (Root.of(-2), Root.of(2))
    assert decomposition.space(Root.of(-2)) == Subspace.coordinate([1], 3)
    assert decomposition.space(Root.of(2)) == Subspace.coordinate([2], 3)
    assert decomposition.space(Root.of(0)) == decomposition.H
    assert decomposition.space(Root.of(4)).is_zero
    assert is_symmetric(decomposition)


def test_sl2c_roots_use_the_inverse_twist(sl2c: ParsedAlgebra) -> None:
    decomposition = decompose(*sl2c)
    assert decomposition.roots == (Root.of(-2), Root.of(2))
    assert decomposition.phi_h == Matrix.from_rows([[1]])
    assert all(report.holds for report in verify_split(decomposition))


def test_sl2v1_roots(sl2v1: ParsedAlgebra) -> None:
    decomposition = decompose(*sl2v1)
    assert decomposition.roots == (Root.of(-2), Root.of(-1), Root.of(1), Root.of(2))
    assert decomposition.space(Root.of(-1)) == Subspace.coordinate([3], 5)
    assert decomposition.space(Root.of(1)) == Subspace.coordinate([4], 5)


def test_d6_roots(d6: ParsedAlgebra) -> None:
    decomposition = decompose(*d6)
    assert decomposition.rank == 2
    assert decomposition.roots == (
        Root.of(-2, 0),
        Root.of(0, -2),
        Root.of(0, 2),
        Root.of(2, 0),
    )
    assert decomposition.phi_h == Matrix.identity(2)
    assert root_orbit(decomposition, Root.of(2, 0)) == [Root.of(2, 0)]


def test_lb2_h_not_maximal(lb2: ParsedAlgebra) -> None:
    with pytest.raises(HNotMaximalError) as exc:
        decompose(*lb2)
    assert str(exc.value) == "HNotMaximal: L_0 = span{e1, e2} ⊋ H"
    assert exc.value.witness == Subspace.full(2)


def test_non_abelian_h_is_rejected(sl2: ParsedAlgebra) -> None:
    with pytest.raises(NotAbelianError) as exc:
        decompose(sl2.algebra, [unit_vector(3, 0), unit_vector(3, 1)])
    assert exc.value.witness == (0, 1)


def test_rotation_is_not_split() -> None:
    rotation = HomAlgebra.from_table(
        "rotation",
        3,
        {(0, 1): {2: -1}, (0, 2): {1: 1}, (1, 0): {2: 1}, (2, 0): {1: -1}},
        labels=("h", "x", "y"),
    )
    with pytest.raises(NotSplitError, match="NotSplit"):
        decompose(rotation, [unit_vector(3, 0)])


def test_twist_must_preserve_h(d6: ParsedAlgebra, fixtures_dir: Path) -> None:
    psi = load_psi(fixtures_dir / "psi_d6_swap.json", 6)
    twisted = yau_twist(d6.algebra, psi)
    with pytest.raises(NotPhiStableError, match="phi\\(H\\) ≠ H"):
        decompose(twisted, [unit_vector(6, 0)])


def test_decompose_requires_hom_leibniz() -> None:
    algebra = HomAlgebra.from_table("idempotent", 1, {(0, 0): {0: 1}})
    with pytest.raises(DecompositionError, match="Hom-Leibniz"):
        decompose(algebra, [])


def test_swap_twist_permutes_roots(d6: ParsedAlgebra, fixtures_dir: Path) -> None:
    psi = load_psi(fixtures_dir / "psi_d6_swap.json", 6)
    decomposition = decompose(yau_twist(d6.algebra, psi), d6.h_basis)
    assert decomposition.phi_h == Matrix.from_rows([[0, 1], [1, 0]])
    assert root_orbit(decomposition, Root.of(2, 0)) == [Root.of(2, 0), Root.of(0, 2)]
    assert root_phi_pow(decomposition, Root.of(-2, 0), 2) == Root.of(-2, 0)
    assert root_phi_pow(decomposition, Root.of(-2, 0), -1) == Root.of(0, -2)
    assert all(report.holds for report in verify_split(decomposition))


def test_twist_family_decomposes(sl2: ParsedAlgebra) -> None:
    for label, psi in sl2_twist_family():
        decomposition = decompose(yau_twist(sl2.algebra, psi), sl2.h_basis)
        assert decomposition.phi_h in (Matrix.from_rows([[1]]), Matrix.from_rows([[-1]])), label
        assert len(decomposition.roots) == 2, label
        failures = [r.name for r in verify_split(decomposition) if not r.holds]
        assert not failures, (label, failures)


def test_root_phi_pow_rejects_non_roots(sl2: ParsedAlgebra) -> None:
    decomposition = decompose(*sl2)
    with pytest.raises(RootNotInLambdaError):
        root_phi_pow(decomposition, Root.of(1), 1)
    assert root_phi_pow(decomposition, Root.of(0), 3) == Root.of(0)


def test_separating_element_prefers_basis_vectors(d6: ParsedAlgebra) -> None:
    decomposition = decompose(*d6)
    h0 = find_separating_element(decomposition, Root.of(2, 0), Root.of(0, 2))
    assert h0 == unit_vector(6, 0)
    assert evaluate(decomposition, Root.of(2, 0), h0) == Fraction(2)


def test_separating_element_falls_back_to_combinations(d6: ParsedAlgebra) -> None:
    decomposition = decompose(*d6)
    h0 = find_separating_element(decomposition, Root.of(2, 0), Root.of(2, 2))
    assert h0 == tuple(a + b for a, b in zip(unit_vector(6, 0), unit_vector(6, 3)))


def test_separating_element_needs_distinct_nonzero_alpha(d6: ParsedAlgebra) -> None:
    decomposition = decompose(*d6)
    with pytest.raises(NotSeparableError):
        find_separating_element(decomposition, Root.of(0, 0), Root.of(2, 0))
    with pytest.raises(NotSeparableError):
        find_separating_element(decomposition, Root.of(2, 0), Root.of(2, 0))


def test_semidirect_weights_depend_on_the_embedding(sl2: ParsedAlgebra) -> None:
    decomposition = decompose(*sl2)
    quotient = check_semidirect_weights(decomposition, HEmbedding.QUOTIENT)
    assert quotient.holds, quotient.message
    assert [entry.expected_dim for entry in quotient.entries] == [2, 2, 2]
    diagonal = check_semidirect_weights(decomposition, "diagonal")
    assert not diagonal.holds
    assert diagonal.embedding is HEmbedding.DIAGONAL


def test_semidirect_weights_of_sl2v1(sl2v1: ParsedAlgebra) -> None:
    report = check_semidirect_weights(decompose(*sl2v1))
    assert report.holds, report.message
    assert [entry.expected_dim for entry in report.entries] == [2, 2, 1, 1, 2]


def test_separating_element_search_is_bounded(d6: ParsedAlgebra) -> None:
    decomposition = decompose(*d6)
    with pytest.raises(InternalInconsistencyError, match="t <= 0") as exc:
        find_separating_element(decomposition, Root.of(2, 0), Root.of(2, 2), max_multiplier=0)
    assert "search.separating_max_multiplier" in str(exc.value)
