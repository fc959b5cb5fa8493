from __future__ import annotations

from dataclasses import replace
from pathlib import Path

import pytest

from homleibniz.algebra.constructions import yau_twist
from homleibniz.algebra.ideals import compute_J
from homleibniz.connections.connections import (
    HypothesisMissingError,
    connected,
    connection_classes,
    connection_table,
    partial_sums,
    reachability_partition,
    shift_connection,
    verify_connection,
)
from homleibniz.connections.nj import (
    ClassMismatchError,
    nj_class_of,
    nj_classes,
    nj_connected,
    verify_nj_connection,
)
from homleibniz.diagnostics.jsplit import Side, split_roots_by_J
from homleibniz.errors import InternalInconsistencyError
from homleibniz.loaders.algebra_loader import ParsedAlgebra, load_psi
from homleibniz.roots.decomposition import Root, RootNotInLambdaError, decompose


def test_sl2v1_single_step_connection(sl2v1: ParsedAlgebra) -> None:
    decomposition = decompose(*sl2v1)
    certificate = connected(decomposition, Root.of(1), Root.of(-1))
    assert certificate is not None
    assert certificate.length == 1
    assert certificate.chain == (Root.of(1),)
    assert certificate.end_sign == -1
    assert verify_connection(decomposition, Root.of(1), Root.of(-1), certificate)


def test_every_certificate_replays(sl2v1: ParsedAlgebra, d6: ParsedAlgebra) -> None:
    for parsed in (sl2v1, d6):
        decomposition = decompose(*parsed)
        for (alpha, beta), certificate in connection_table(decomposition).items():
            assert verify_connection(decomposition, alpha, beta, certificate)
            shifted = shift_connection(decomposition, certificate, 1)
            assert verify_connection(decomposition, alpha, beta, shifted)


def test_tampered_certificate_is_rejected(sl2v1: ParsedAlgebra) -> None:
    decomposition = decompose(*sl2v1)
    certificate = connected(decomposition, Root.of(-2), Root.of(1))
    assert certificate is not None
    flipped = replace(certificate, end_sign=-certificate.end_sign)
    assert not verify_connection(decomposition, Root.of(-2), Root.of(1), flipped)
    assert not verify_connection(
        decomposition, Root.of(-2), Root.of(1), replace(certificate, start_shift=-1)
    )


def test_partial_sums_follow_the_twist(sl2v1: ParsedAlgebra) -> None:
    decomposition = decompose(*sl2v1)
    assert partial_sums(decomposition, [Root.of(-2), Root.of(1)]) == (Root.of(-2), Root.of(-1))


def test_sl2v1_has_one_connection_class(sl2v1: ParsedAlgebra) -> None:
    partition = connection_classes(decompose(*sl2v1))
    assert partition.classes == ((Root.of(-2), Root.of(-1), Root.of(1), Root.of(2)),)


def test_d6_has_two_connection_classes(d6: ParsedAlgebra) -> None:
    partition = connection_classes(decompose(*d6))
    assert partition.classes == (
        (Root.of(-2, 0), Root.of(2, 0)),
        (Root.of(0, -2), Root.of(0, 2)),
    )
    assert partition.class_of(Root.of(0, 2)) == (Root.of(0, -2), Root.of(0, 2))
    assert connected(decompose(*d6), Root.of(2, 0), Root.of(0, 2)) is None


def test_swap_twist_joins_the_d6_classes(d6: ParsedAlgebra, fixtures_dir: Path) -> None:
    psi = load_psi(fixtures_dir / "psi_d6_swap.json", 6)
    decomposition = decompose(yau_twist(d6.algebra, psi), d6.h_basis)
    assert len(connection_classes(decomposition)) == 1


def test_connection_classes_need_symmetric_roots(j_split: ParsedAlgebra) -> None:
    with pytest.raises(HypothesisMissingError) as exc:
        connection_classes(decompose(*j_split))
    assert exc.value.hypothesis == "Λ symmetric"


def test_connected_rejects_non_roots(sl2: ParsedAlgebra) -> None:
    with pytest.raises(RootNotInLambdaError):
        connected(decompose(*sl2), Root.of(1), Root.of(2))


def test_reachability_partition_detects_asymmetry() -> None:
    a, b = Root.of(1), Root.of(2)
    with pytest.raises(InternalInconsistencyError, match="not symmetric"):
        reachability_partition([a, b], {a: {a, b}, b: {b}}, "test relation")


def test_nj_classes_of_sl2v1(sl2v1: ParsedAlgebra) -> None:
    decomposition = decompose(*sl2v1)
    js = split_roots_by_J(sl2v1.algebra, decomposition, compute_J(sl2v1.algebra))
    assert nj_classes(decomposition, js, Side.NOT_J).classes == ((Root.of(-2), Root.of(2)),)
    assert nj_classes(decomposition, js, "J").classes == ((Root.of(-1), Root.of(1)),)
    assert nj_class_of(decomposition, js, Root.of(1)) == (Root.of(-1), Root.of(1))

    certificate = nj_connected(decomposition, js, Root.of(1), Root.of(-1))
    assert certificate is not None
    assert verify_nj_connection(decomposition, js, Root.of(1), Root.of(-1), certificate)


def test_nj_connection_needs_matching_sides(sl2v1: ParsedAlgebra) -> None:
    decomposition = decompose(*sl2v1)
    js = split_roots_by_J(sl2v1.algebra, decomposition)
    with pytest.raises(ClassMismatchError):
        nj_connected(decomposition, js, Root.of(1), Root.of(2))


def test_nj_classes_need_symmetric_side(j_split: ParsedAlgebra) -> None:
    decomposition = decompose(*j_split)
    js = split_roots_by_J(j_split.algebra, decomposition)
    with pytest.raises(HypothesisMissingError):
        nj_classes(decomposition, js, Side.J)


@pytest.mark.parametrize("name", ["sl2v1", "sl2_mixed", "sl2v1x2"])
def test_nj_certificates_are_plain_connections(
    name: str, request: pytest.FixtureRequest
) -> None:
    parsed: ParsedAlgebra = request.getfixturevalue(name)
    decomposition = decompose(*parsed)
    js = split_roots_by_J(parsed.algebra, decomposition)
    checked = 0
    for side in (Side.J, Side.NOT_J):
        roots = js.roots_of(side)
        for alpha in roots:
            for beta in roots:
                certificate = nj_connected(decomposition, js, alpha, beta)
                if certificate is None:
                    continue
                assert verify_nj_connection(decomposition, js, alpha, beta, certificate)
                assert verify_connection(decomposition, alpha, beta, certificate)
                checked += 1
    assert checked > 0


@pytest.mark.parametrize("name", ["sl2v1", "sl2v1x2"])
def test_nj_classes_refine_connection_classes(
    name: str, request: pytest.FixtureRequest
) -> None:
    parsed: ParsedAlgebra = request.getfixturevalue(name)
    decomposition = decompose(*parsed)
    js = split_roots_by_J(parsed.algebra, decomposition)
    partition = connection_classes(decomposition)
    for side in (Side.J, Side.NOT_J):
        for nj_class in nj_classes(decomposition, js, side).classes:
            assert set(nj_class) <= set(partition.class_of(nj_class[0]))
            assert set(nj_class) <= set(js.roots_of(side))


def test_nj_classes_leave_out_mixed_roots(sl2_mixed: ParsedAlgebra) -> None:
    decomposition = decompose(*sl2_mixed)
    js = split_roots_by_J(sl2_mixed.algebra, decomposition)
    assert js.roots_of(Side.J) == ()
    assert nj_classes(decomposition, js, Side.NOT_J).classes == ((Root.of(-2), Root.of(2)),)
    assert len(connection_classes(decomposition)) == 1
