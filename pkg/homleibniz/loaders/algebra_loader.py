"""Loader for algebra and psi JSON files."""

from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path
from typing import Any, NamedTuple, Sequence

from pydantic import ValidationError

from homleibniz.algebra.model import AlgebraDefinitionError, HomAlgebra
from homleibniz.errors import HomLeibnizError
from homleibniz.linalg.matrix import Matrix, Vector, unit_vector
from homleibniz.schema.algebra_schema import AlgebraFile, PsiFile, RationalText

_RATIONAL = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


class AlgebraLoadError(HomLeibnizError):
    """Raised when an algebra or psi file cannot be read, parsed or validated."""


class NonRationalError(AlgebraLoadError):
    """Raised when an entry is not an exact rational ``p`` or ``p/q`` with ``q != 0``."""


class IndexOutOfRangeError(AlgebraLoadError):
    """Raised when a basis index lies outside ``0 .. dim - 1``."""


class ParsedAlgebra(NamedTuple):
    algebra: HomAlgebra
    h_basis: tuple[Vector, ...]


def parse_rational(value: RationalText, field: str) -> Fraction:
    """
    Parse ``p`` or ``p/q`` exactly.

    :param value: Integer or string entry.
    :type value: int | str
    :param field: Location used in error messages.
    :type field: str
    :return: The exact value.
    :rtype: fractions.Fraction
    :raises NonRationalError: If the entry is malformed or has a zero denominator.
    """
    if isinstance(value, bool):
        raise NonRationalError(f"{field}: expected a rational, got {value!r}.")
    if isinstance(value, int):
        return Fraction(value)
    match = _RATIONAL.match(value)
    if match is None:
        raise NonRationalError(f"{field}: {value!r} is not a rational 'p' or 'p/q'.")
    numerator, denominator = match.group(1), match.group(2)
    if denominator is not None and int(denominator) == 0:
        raise NonRationalError(f"{field}: {value!r} has a zero denominator.")
    return Fraction(int(numerator), int(denominator or 1))


def _read_json(path: str | Path, kind: str) -> Any:
    path = Path(path)
    if not path.exists():
        raise AlgebraLoadError(f"{kind} file not found: {path}")
    try:
        raw = path.read_text(encoding="utf-8")
    except Exception as exc:
        raise AlgebraLoadError(f"Failed to read {kind} file: {exc}") from exc
    try:
        return json.loads(raw)
    except json.JSONDecodeError as exc:
        raise AlgebraLoadError(
            f"{kind} file is not valid JSON (line {exc.lineno}, column {exc.colno}): {exc.msg}"
        ) from exc


def _validation_message(exc: ValidationError) -> str:
    parts = []
    for error in exc.errors():
        location = ".".join(str(part) for part in error["loc"])
        parts.append(f"{location}: {error['msg']}")
    return "; ".join(parts)


def _check_index(index: int, dim: int, field: str) -> int:
    if not 0 <= index < dim:
        raise IndexOutOfRangeError(f"{field}: index {index} is outside 0..{dim - 1}.")
    return index


def _parse_matrix(rows: Sequence[Sequence[RationalText]], dim: int, field: str) -> Matrix:
    if len(rows) != dim or any(len(row) != dim for row in rows):
        raise AlgebraLoadError(f"{field}: expected a {dim}x{dim} matrix.")
    return Matrix.from_rows(
        [
            [parse_rational(entry, f"{field}[{r}][{c}]") for c, entry in enumerate(row)]
            for r, row in enumerate(rows)
        ],
        dim,
    )


def _parse_bracket(document: AlgebraFile) -> dict[tuple[int, int], dict[int, Fraction]]:
    table: dict[tuple[int, int], dict[int, Fraction]] = {}
    for key, terms in document.bracket.items():
        field = f"bracket.{key}"
        pieces = key.split(",")
        if len(pieces) != 2 or not all(p.strip().lstrip("-").isdigit() for p in pieces):
            raise AlgebraLoadError(f"{field}: keys must look like 'i,j'.")
        i, j = (_check_index(int(p), document.dim, field) for p in pieces)
        entry = table.setdefault((i, j), {})
        for position, (k, coefficient) in enumerate(terms):
            _check_index(k, document.dim, f"{field}[{position}]")
            value = parse_rational(coefficient, f"{field}[{position}]")
            entry[k] = entry.get(k, Fraction(0)) + value
    return table


def _parse_h(document: AlgebraFile) -> tuple[Vector, ...]:
    n = document.dim
    basis: list[Vector] = []
    for position, item in enumerate(document.H):
        field = f"H[{position}]"
        if isinstance(item, int):
            basis.append(unit_vector(n, _check_index(item, n, field)))
            continue
        if len(item) != n:
            raise AlgebraLoadError(f"{field}: expected a vector of length {n}.")
        basis.append(
            tuple(parse_rational(entry, f"{field}[{c}]") for c, entry in enumerate(item))
        )
    return tuple(basis)


def algebra_from_document(document: AlgebraFile) -> ParsedAlgebra:
    """
    Turn a validated document into an algebra and its H basis.

    :param document: Validated file contents.
    :type document: homleibniz.schema.algebra_schema.AlgebraFile
    :return: The algebra and the listed H elements.
    :rtype: ParsedAlgebra
    :raises AlgebraLoadError: On any inconsistency, with the offending field named.
    """
    n = document.dim
    if document.basis and len(document.basis) != n:
        raise AlgebraLoadError(f"basis: expected {n} labels, got {len(document.basis)}.")
    table = _parse_bracket(document)
    phi = _parse_matrix(document.phi, n, "phi") if document.phi is not None else None
    h_basis = _parse_h(document)
    try:
        algebra = HomAlgebra.from_table(
            document.name, n, table, phi=phi, labels=document.basis
        )
    except AlgebraDefinitionError as exc:
        raise AlgebraLoadError(str(exc)) from exc
    return ParsedAlgebra(algebra=algebra, h_basis=h_basis)


def parse_algebra(path: str | Path) -> ParsedAlgebra:
    """
    Load an algebra JSON file.

    :param path: Path to the file.
    :type path: str | pathlib.Path
    :return: The algebra and its H basis.
    :rtype: ParsedAlgebra
    :raises AlgebraLoadError: If the file is missing, malformed or inconsistent.
    :raises NonRationalError: If an entry is not an exact rational.
    :raises IndexOutOfRangeError: If a basis index is out of range.
    """
    payload = _read_json(path, "Algebra")
    try:
        document = AlgebraFile.model_validate(payload)
    except ValidationError as exc:
        raise AlgebraLoadError(
            f"Algebra schema validation failed: {_validation_message(exc)}"
        ) from exc
    return algebra_from_document(document)


def load_psi(path: str | Path, dim: int) -> Matrix:
    """
    Load a twisting map, given either as ``{"psi": [[...]]}`` or as a bare matrix.

    :raises AlgebraLoadError: If the file is malformed or has the wrong shape.
    """
    payload = _read_json(path, "Psi")
    if isinstance(payload, list):
        payload = {"psi": payload}
    try:
        document = PsiFile.model_validate(payload)
    except ValidationError as exc:
        raise AlgebraLoadError(
            f"Psi schema validation failed: {_validation_message(exc)}"
        ) from exc
    return _parse_matrix(document.psi, dim, "psi")


def format_rational(value: Fraction) -> str:
    return str(value)


def algebra_to_document(algebra: HomAlgebra, h_basis: Sequence[Vector] = ()) -> AlgebraFile:
    """The file representation of an algebra; zero products are omitted."""
    n = algebra.dim
    bracket: dict[str, list[tuple[int, RationalText]]] = {}
    for i in range(n):
        for j in range(n):
            terms = [
                (k, format_rational(c)) for k, c in enumerate(algebra.structure[i][j]) if c
            ]
            if terms:
                bracket[f"{i},{j}"] = terms
    phi = None
    if algebra.phi != Matrix.identity(n):
        phi = [[format_rational(c) for c in row] for row in algebra.phi.rows]
    return AlgebraFile(
        name=algebra.name,
        dim=n,
        basis=[algebra.label(i) for i in range(n)],
        bracket=bracket,
        phi=phi,
        H=[[format_rational(c) for c in h] for h in h_basis],
    )


def write_algebra(
    algebra: HomAlgebra, path: str | Path, h_basis: Sequence[Vector] = (), indent: int = 2
) -> Path:
    """Write ``algebra`` as a JSON file readable by ``parse_algebra``."""
    path = Path(path)
    document = algebra_to_document(algebra, h_basis)
    path.parent.mkdir(parents=True, exist_ok=True)
    try:
        path.write_text(
            document.model_dump_json(indent=indent, exclude_none=True) + "\n", encoding="utf-8"
        )
    except OSError as exc:
        raise AlgebraLoadError(f"Failed to write algebra file '{path}': {exc}") from exc
    return path
