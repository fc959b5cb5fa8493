from __future__ import annotations

import pytest

from homleibniz.algebra.ideals import is_ideal
from homleibniz.linalg.subspace import Subspace
from homleibniz.loaders.algebra_loader import ParsedAlgebra
from homleibniz.roots.decomposition import Root, decompose
from homleibniz.structure.class_ideals import (
    NotAClassError,
    bracket_span,
    build_class_ideal,
    check_pairwise_zero,
    check_simple_necessary,
    global_decomposition,
    root_span,
)


def test_sl2_is_a_single_class_ideal(sl2: ParsedAlgebra) -> None:
    decomposition = decompose(*sl2)
    result = global_decomposition(decomposition)
    assert result.U.is_zero
    assert len(result.summands) == 1
    assert result.summands[0].I.is_full
    assert result.summands[0].I0 == decomposition.H
    assert result.direct


def test_sl2v1_global_decomposition(sl2v1: ParsedAlgebra) -> None:
    result = global_decomposition(decompose(*sl2v1))
    assert result.U.is_zero
    assert [summand.I for summand in result.summands] == [Subspace.full(5)]
    assert result.direct
    assert result.direct_reason == "L = ⊕ I_[α]"


def test_d6_splits_into_two_ideals(d6: ParsedAlgebra) -> None:
    decomposition = decompose(*d6)
    result = global_decomposition(decomposition)
    ideals = [summand.I for summand in result.summands]
    assert ideals == [Subspace.coordinate([0, 1, 2], 6), Subspace.coordinate([3, 4, 5], 6)]
    assert all(is_ideal(d6.algebra, ideal) for ideal in ideals)
    assert sum(ideal.dim for ideal in ideals) == 6
    assert result.direct
    assert check_pairwise_zero(d6.algebra, result.summands).holds


def test_build_class_ideal_rejects_non_classes(d6: ParsedAlgebra) -> None:
    decomposition = decompose(*d6)
    with pytest.raises(NotAClassError):
        build_class_ideal(decomposition, [Root.of(2, 0), Root.of(0, 2)])


def test_bracket_and_root_spans(sl2: ParsedAlgebra) -> None:
    decomposition = decompose(*sl2)
    assert bracket_span(decomposition, [Root.of(2)]) == decomposition.H
    assert root_span(decomposition, decomposition.roots) == Subspace.coordinate([1, 2], 3)


def test_simple_necessary_conditions(sl2: ParsedAlgebra, d6: ParsedAlgebra) -> None:
    assert check_simple_necessary(sl2.algebra, decompose(*sl2)).holds
    report = check_simple_necessary(d6.algebra, decompose(*d6))
    assert not report.holds
    assert report.message == "2 connection classes"
    assert report.witness is not None
    assert report.witness.residual == (0, 0, 0, 0, 1, 0)
    assert report.applicable


def test_simple_necessary_is_not_applicable_without_symmetry(j_split: ParsedAlgebra) -> None:
    report = check_simple_necessary(j_split.algebra, decompose(*j_split))
    assert not report.applicable
    assert report.holds
    assert report.message == "hypotheses not met: Λ symmetric"


def test_pairwise_zero_fails_for_overlapping_summands(sl2: ParsedAlgebra) -> None:
    decomposition = decompose(*sl2)
    summand = global_decomposition(decomposition).summands[0]
    report = check_pairwise_zero(sl2.algebra, [summand, summand])
    assert not report.holds
    assert report.witness is not None
    assert report.witness.indices == (0, 1)
