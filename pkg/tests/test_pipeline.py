from __future__ import annotations

from pathlib import Path

import pytest

from homleibniz.algebra.constructions import NotAutomorphismError
from homleibniz.app.pipeline import (
    analyse,
    analyse_parsed,
    semidirect_file,
    twist_file,
    validate_algebra,
)
from homleibniz.diagnostics.jsplit import Side
from homleibniz.diagnostics.simplicity import SimplicityStatus
from homleibniz.linalg.matrix import Matrix
from homleibniz.linalg.subspace import Subspace
from homleibniz.loaders.algebra_loader import ParsedAlgebra, parse_algebra
from homleibniz.roots.decomposition import HNotMaximalError, Root


def test_validate_algebra_order(sl2v1: ParsedAlgebra) -> None:
    reports = validate_algebra(sl2v1.algebra)
    assert [r.name for r in reports] == ["hom_leibniz", "regular", "hom_lie"]
    assert [r.holds for r in reports] == [True, True, False]


def test_analyse_sl2v1(sl2v1_path: Path) -> None:
    result = analyse(sl2v1_path)

    assert result.decomposition is not None
    assert result.j_ideal == Subspace.coordinate([3, 4], 5)
    assert result.partition is not None and len(result.partition) == 1
    assert len(result.connections) == 16
    assert result.structure is not None and result.structure.direct
    assert result.nj_partitions[Side.J].classes == ((Root.of(-1), Root.of(1)),)
    assert result.verdict is not None
    assert result.verdict.status is SimplicityStatus.SIMPLE
    assert result.semidirect is not None
    assert result.semidirect.algebra.dim == 8
    assert result.semidirect.hom_lie.holds
    assert result.semidirect.weights is not None and result.semidirect.weights.holds
    assert result.checks == []


def test_analyse_records_decomposition_failure(lb2_path: Path) -> None:
    result = analyse(lb2_path)

    assert isinstance(result.decomposition_error, HNotMaximalError)
    assert result.decomposition is None
    assert result.verdict is None
    assert len(result.validity) == 3
    assert result.j_ideal == Subspace.coordinate([0], 2)


@pytest.mark.parametrize("name", ["sl2", "sl2c", "sl2v1", "d6"])
def test_every_check_holds_on_the_corpus(name: str, request: pytest.FixtureRequest) -> None:
    parsed: ParsedAlgebra = request.getfixturevalue(name)
    result = analyse_parsed(parsed, check_all=True)

    failing = [(r.name, r.message) for r in result.checks if not r.holds]
    assert not failing
    names = {r.name for r in result.checks}
    assert {"semidirect dimension", "separating elements", "hom_lie"} <= names


def test_non_symmetric_roots_are_inconclusive(j_split: ParsedAlgebra) -> None:
    result = analyse_parsed(j_split)

    assert result.structure_error == "Λ is not symmetric"
    assert result.partition is None
    assert result.nj_errors[Side.J] == "L = [L, L]"
    assert result.verdict is not None
    assert result.verdict.status is SimplicityStatus.INCONCLUSIVE
    assert any(reason.startswith("[L, L] = L") for reason in result.verdict.reasons)


def test_twist_file_writes_a_parseable_algebra(
    sl2_path: Path, fixtures_dir: Path, tmp_path: Path
) -> None:
    out = twist_file(sl2_path, fixtures_dir / "psi_sl2_scale.json", tmp_path / "sl2c.json", "c2")
    twisted = parse_algebra(out)

    assert twisted.algebra.name == "c2"
    assert twisted.algebra.phi == Matrix.diagonal([1, 2, "1/2"])
    assert twisted.h_basis == parse_algebra(sl2_path).h_basis


def test_twist_file_rejects_bad_psi(
    sl2_path: Path, fixtures_dir: Path, tmp_path: Path
) -> None:
    with pytest.raises(NotAutomorphismError):
        twist_file(sl2_path, fixtures_dir / "psi_sl2_bad.json", tmp_path / "bad.json")
    assert not (tmp_path / "bad.json").exists()


def test_semidirect_file(sl2v1_path: Path, tmp_path: Path) -> None:
    written, result = semidirect_file(sl2v1_path, tmp_path / "semi.json")
    parsed = parse_algebra(written)

    assert parsed.algebra.dim == 8
    assert parsed.h_basis == ()
    assert result.hom_lie.holds
    assert result.weights is not None
