"""Bundled algebra files used by the tests and as worked examples."""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path

from homleibniz.linalg.matrix import Matrix

CORPUS_DIR = Path(__file__).resolve().parent

CORPUS_NAMES = ("a0", "sl2", "sl2c", "lb2", "sl2v1", "d6", "sl2_mixed", "sl2v1x2")


def corpus_path(name: str) -> Path:
    """
    Path of a bundled algebra file.

    :param name: One of ``CORPUS_NAMES``.
    :type name: str
    :return: Path to ``<name>.json``.
    :rtype: pathlib.Path
    :raises KeyError: If ``name`` is not bundled.
    """
    if name not in CORPUS_NAMES:
        raise KeyError(f"Unknown corpus algebra '{name}'. Known: {', '.join(CORPUS_NAMES)}.")
    return CORPUS_DIR / f"{name}.json"


TWIST_SCALARS = (Fraction(2), Fraction(3), Fraction(5), Fraction(1, 2), Fraction(1, 3))

SL2_INVOLUTION = Matrix.from_rows([[-1, 0, 0], [0, 0, -1], [0, -1, 0]])


def sl2_twist_family() -> list[tuple[str, Matrix]]:
    """
    Automorphisms of sl2 (basis h, e, f) for Yau twists.

    Each ``diag(1, c, 1/c)`` appears alone and composed with the involution
    ``h, e, f -> -h, -f, -e``; both fix H = span{h} up to sign.
    """
    family: list[tuple[str, Matrix]] = []
    for c in TWIST_SCALARS:
        scaling = Matrix.diagonal([1, c, 1 / c])
        family.append((f"c={c}", scaling))
        family.append((f"c={c},involution", scaling @ SL2_INVOLUTION))
    return family
