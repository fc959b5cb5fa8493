from __future__ import annotations

import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from homleibniz.corpus import corpus_path  # noqa: E402
from homleibniz.loaders.algebra_loader import ParsedAlgebra, parse_algebra  # noqa: E402


@pytest.fixture()
def fixtures_dir() -> Path:
    return Path(__file__).parent / "fixtures"


@pytest.fixture()
def sl2_path() -> Path:
    return corpus_path("sl2")


@pytest.fixture()
def sl2v1_path() -> Path:
    return corpus_path("sl2v1")


@pytest.fixture()
def d6_path() -> Path:
    return corpus_path("d6")


@pytest.fixture()
def lb2_path() -> Path:
    return corpus_path("lb2")


@pytest.fixture()
def a0() -> ParsedAlgebra:
    return parse_algebra(corpus_path("a0"))


@pytest.fixture()
def sl2() -> ParsedAlgebra:
    return parse_algebra(corpus_path("sl2"))


@pytest.fixture()
def sl2c() -> ParsedAlgebra:
    return parse_algebra(corpus_path("sl2c"))


@pytest.fixture()
def lb2() -> ParsedAlgebra:
    return parse_algebra(corpus_path("lb2"))


@pytest.fixture()
def sl2v1() -> ParsedAlgebra:
    return parse_algebra(corpus_path("sl2v1"))


@pytest.fixture()
def d6() -> ParsedAlgebra:
    return parse_algebra(corpus_path("d6"))


@pytest.fixture()
def sl2_mixed() -> ParsedAlgebra:
    return parse_algebra(corpus_path("sl2_mixed"))


@pytest.fixture()
def sl2v1x2() -> ParsedAlgebra:
    return parse_algebra(corpus_path("sl2v1x2"))


@pytest.fixture()
def j_split(fixtures_dir: Path) -> ParsedAlgebra:
    return parse_algebra(fixtures_dir / "j_split.json")
