from __future__ import annotations

import random
from fractions import Fraction

import pytest

from homleibniz.algebra.ideals import compute_J, ideal_closure, lie_annihilator
from homleibniz.connections.connections import HypothesisMissingError
from homleibniz.connections.nj import ClassMismatchError
from homleibniz.diagnostics.hypotheses import (
    MAXIMAL_LENGTH,
    ROOT_MULTIPLICATIVE,
    evaluate_hypotheses,
)
from homleibniz.diagnostics.jsplit import (
    NotAnIdealError,
    check_H_generated,
    check_ideal_homogeneous,
    check_J_products_vanish,
    check_maximal_length,
    split_roots_by_J,
)
from homleibniz.diagnostics.multiplicativity import check_root_multiplicative
from homleibniz.diagnostics.propositions import (
    IN_H_VANISHES,
    IN_J_SPLITS,
    OUTSIDE_H_PLUS_J_IS_WHOLE,
    OUTSIDE_J_IS_WHOLE,
    check_ideal_propositions,
)
from homleibniz.diagnostics.sub_ideals import (
    class_J_ideal,
    closed_root_sets,
    find_orthogonal_ideals,
    j_complement,
    sub_ideals_of_J,
)
from homleibniz.linalg.subspace import Subspace
from homleibniz.loaders.algebra_loader import ParsedAlgebra
from homleibniz.roots.decomposition import Root, decompose


def test_sl2v1_j_split(sl2v1: ParsedAlgebra) -> None:
    decomposition = decompose(*sl2v1)
    js = split_roots_by_J(sl2v1.algebra, decomposition)
    assert js.J == Subspace.coordinate([3, 4], 5)
    assert js.lambda_J == (Root.of(-1), Root.of(1))
    assert js.lambda_notJ == (Root.of(-2), Root.of(2))
    assert js.mixed == ()
    assert js.j_cap_h.is_zero
    assert check_H_generated(sl2v1.algebra, decomposition, js)
    assert check_J_products_vanish(sl2v1.algebra, decomposition, js).holds
    assert lie_annihilator(sl2v1.algebra, decomposition, js).is_zero


def test_sl2_mixed_roots_meet_j_partially(sl2_mixed: ParsedAlgebra) -> None:
    decomposition = decompose(*sl2_mixed)
    js = split_roots_by_J(sl2_mixed.algebra, decomposition)
    assert js.mixed == (Root.of(-1), Root.of(1))
    assert decomposition.space(Root.of(-1)).dim == 2
    assert not check_maximal_length(decomposition)
    with pytest.raises(HypothesisMissingError) as exc:
        check_root_multiplicative(sl2_mixed.algebra, decomposition, js)
    assert exc.value.hypothesis == "maximal length"


def test_root_multiplicativity_readings_disagree_on_sl2v1(sl2v1: ParsedAlgebra) -> None:
    decomposition = decompose(*sl2v1)
    js = split_roots_by_J(sl2v1.algebra, decomposition)
    result = check_root_multiplicative(sl2v1.algebra, decomposition, js)
    assert [(i.condition, i.alpha, i.other) for i in result.instances] == [
        (2, Root.of(-2), Root.of(1)),
        (2, Root.of(2), Root.of(-1)),
    ]
    assert result.holds
    assert not result.literal_holds
    assert result.readings_disagree
    assert result.report.holds


def test_hypotheses_of_sl2_mixed_name_the_gaps(sl2_mixed: ParsedAlgebra) -> None:
    decomposition = decompose(*sl2_mixed)
    js = split_roots_by_J(sl2_mixed.algebra, decomposition)
    hypotheses = evaluate_hypotheses(sl2_mixed.algebra, decomposition, js)
    failing = {check.name: check.detail for check in hypotheses.failures}
    assert MAXIMAL_LENGTH in failing
    assert failing[ROOT_MULTIPLICATIVE] == "not evaluated: maximal length fails"
    assert hypotheses.multiplicativity is None


def test_closed_root_sets_of_sl2v1(sl2v1: ParsedAlgebra) -> None:
    decomposition = decompose(*sl2v1)
    js = split_roots_by_J(sl2v1.algebra, decomposition)
    assert closed_root_sets(decomposition, js) == [(Root.of(-1), Root.of(1))]
    assert sub_ideals_of_J(sl2v1.algebra, decomposition, js) == [(Root.of(-1), Root.of(1))]


def test_two_copies_give_two_minimal_closed_sets(sl2v1x2: ParsedAlgebra) -> None:
    decomposition = decompose(*sl2v1x2)
    js = split_roots_by_J(sl2v1x2.algebra, decomposition)
    assert sub_ideals_of_J(sl2v1x2.algebra, decomposition, js) == [
        (Root.of(-1, 0), Root.of(1, 0)),
        (Root.of(0, -1), Root.of(0, 1)),
    ]


def test_class_j_ideal_is_j(sl2v1: ParsedAlgebra) -> None:
    decomposition = decompose(*sl2v1)
    js = split_roots_by_J(sl2v1.algebra, decomposition)
    assert class_J_ideal(sl2v1.algebra, decomposition, js, Root.of(1)) == js.J
    with pytest.raises(ClassMismatchError):
        class_J_ideal(sl2v1.algebra, decomposition, js, Root.of(2))


def test_j_complement_of_j_itself(j_split: ParsedAlgebra) -> None:
    decomposition = decompose(*j_split)
    js = split_roots_by_J(j_split.algebra, decomposition)
    assert js.J == Subspace.coordinate([1], 2)
    assert js.lambda_J == (Root.of(1),)
    complement = j_complement(decomposition, js, js.J)
    assert complement.K.is_zero
    assert complement.splits


def test_j_complement_rejects_opposite_roots(sl2v1x2: ParsedAlgebra) -> None:
    decomposition = decompose(*sl2v1x2)
    js = split_roots_by_J(sl2v1x2.algebra, decomposition)
    first_module = Subspace.coordinate([3, 4], 10)
    with pytest.raises(HypothesisMissingError):
        j_complement(decomposition, js, first_module)
    with pytest.raises(HypothesisMissingError):
        j_complement(decomposition, js, Subspace.zero(10))


def test_orthogonal_ideals_of_two_copies(sl2v1x2: ParsedAlgebra) -> None:
    algebra = sl2v1x2.algebra
    first = Subspace.coordinate([0, 1, 2, 3, 4], 10)
    second = Subspace.coordinate([5, 6, 7, 8, 9], 10)
    pair = find_orthogonal_ideals(algebra, [first, second], compute_J(algebra))
    assert pair == (first, second)


def test_propositions_on_j(sl2v1: ParsedAlgebra) -> None:
    decomposition = decompose(*sl2v1)
    js = split_roots_by_J(sl2v1.algebra, decomposition)
    reports = check_ideal_propositions(sl2v1.algebra, decomposition, js, js.J)
    assert [r.name for r in reports] == [
        IN_H_VANISHES,
        OUTSIDE_H_PLUS_J_IS_WHOLE,
        OUTSIDE_J_IS_WHOLE,
        IN_J_SPLITS,
    ]
    assert all(r.holds for r in reports)
    assert reports[3].message == "I = J"
    assert reports[0].message == "hypotheses not met"
    assert not reports[0].applicable


def test_propositions_on_the_whole_algebra(sl2v1: ParsedAlgebra) -> None:
    decomposition = decompose(*sl2v1)
    js = split_roots_by_J(sl2v1.algebra, decomposition)
    reports = check_ideal_propositions(sl2v1.algebra, decomposition, js, Subspace.full(5))
    assert all(r.holds for r in reports)
    assert reports[2].message == "I = L"


def test_propositions_reject_non_ideals(d6: ParsedAlgebra) -> None:
    decomposition = decompose(*d6)
    js = split_roots_by_J(d6.algebra, decomposition)
    with pytest.raises(NotAnIdealError):
        check_ideal_propositions(d6.algebra, decomposition, js, Subspace.coordinate([1], 6))
    with pytest.raises(NotAnIdealError):
        check_ideal_homogeneous(d6.algebra, decomposition, Subspace.coordinate([1], 6))


@pytest.mark.parametrize(
    "name", ["a0", "sl2", "sl2c", "sl2v1", "d6", "sl2_mixed", "sl2v1x2"]
)
def test_random_ideals_are_homogeneous(name: str, request: pytest.FixtureRequest) -> None:
    parsed: ParsedAlgebra = request.getfixturevalue(name)
    decomposition = decompose(*parsed)
    n = parsed.algebra.dim
    rng = random.Random(1729)
    for _ in range(20):
        seed = tuple(
            Fraction(rng.randint(-3, 3)) if rng.random() < 0.3 else Fraction(0)
            for _ in range(n)
        )
        ideal = ideal_closure(parsed.algebra, Subspace.span([seed], n))
        report = check_ideal_homogeneous(parsed.algebra, decomposition, ideal)
        assert report.holds, report.message
