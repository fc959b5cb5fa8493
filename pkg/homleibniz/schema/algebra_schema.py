"""Pydantic schema for algebra JSON files."""

from __future__ import annotations

from typing import Dict, List

from pydantic import BaseModel, ConfigDict, Field

RationalText = int | str


class AlgebraFile(BaseModel):
    """
    An algebra as stored on disk.

    Rationals are written as strings ``"p/q"`` (integers are accepted as
    well). ``bracket`` maps ``"i,j"`` to the nonzero terms ``[k, c]`` of
    ``[e_i, e_j] = sum c e_k``; omitted products are zero. ``phi`` defaults
    to the identity. Each entry of ``H`` is a basis index or a full
    coordinate vector.

    :param name: Algebra name.
    :type name: str
    :param dim: Dimension.
    :type dim: int
    :param basis: Basis labels, one per dimension (optional).
    :type basis: list[str]
    :param bracket: Sparse structure constants.
    :type bracket: dict[str, list[tuple[int, int | str]]]
    :param phi: Twist matrix, rows of rationals.
    :type phi: list[list[int | str]] | None
    :param H: Spanning elements of the abelian subalgebra.
    :type H: list[int | list[int | str]]
    """

    model_config = ConfigDict(extra="forbid")

    name: str
    dim: int = Field(ge=0)
    basis: List[str] = Field(default_factory=list)
    bracket: Dict[str, List[tuple[int, RationalText]]] = Field(default_factory=dict)
    phi: List[List[RationalText]] | None = None
    H: List[int | List[RationalText]] = Field(default_factory=list)


class PsiFile(BaseModel):
    """A twisting map for ``twist``: rows of rationals."""

    model_config = ConfigDict(extra="forbid")

    psi: List[List[RationalText]]
