"""Pydantic schema for the machine-readable analysis report."""

from __future__ import annotations

from typing import Dict, List, Literal, Optional

from pydantic import BaseModel, Field

SCHEMA_VERSION = 1

Rational = str
VectorText = List[Rational]


class IdentityReportModel(BaseModel):
    name: str
    holds: bool
    message: str = ""
    applicable: bool = True
    witness_indices: Optional[List[int]] = None
    witness_residual: Optional[VectorText] = None
    witness_note: str = ""


class SubspaceModel(BaseModel):
    """A subspace as its canonical RREF basis."""

    dim: int
    basis: List[VectorText] = Field(default_factory=list)
    text: str = ""


class RootModel(BaseModel):
    values: VectorText
    space: SubspaceModel


class DecompositionModel(BaseModel):
    H: SubspaceModel
    rank: int
    roots: List[RootModel] = Field(default_factory=list)
    phi_h: List[VectorText] = Field(default_factory=list)
    symmetric: bool
    orbits: List[List[VectorText]] = Field(default_factory=list)


class ConnectionModel(BaseModel):
    source: VectorText
    target: VectorText
    chain: List[VectorText]
    partial_sums: List[VectorText]
    start_shift: int
    end_shift: int
    end_sign: int


class SummandModel(BaseModel):
    class_roots: List[VectorText]
    I0: SubspaceModel
    V: SubspaceModel
    I: SubspaceModel


class StructureModel(BaseModel):
    U: SubspaceModel
    summands: List[SummandModel] = Field(default_factory=list)
    direct: bool
    direct_reason: str = ""
    pairwise: IdentityReportModel
    simple_necessary: IdentityReportModel


class JSplitModel(BaseModel):
    J: SubspaceModel
    lambda_J: List[VectorText] = Field(default_factory=list)
    lambda_notJ: List[VectorText] = Field(default_factory=list)
    mixed: List[VectorText] = Field(default_factory=list)
    j_cap_h: SubspaceModel
    maximal_length: bool


class HypothesisModel(BaseModel):
    name: str
    holds: bool
    detail: str = ""


class MultiplicativityInstanceModel(BaseModel):
    condition: int
    alpha: VectorText
    other: VectorText
    target: VectorText
    literal: bool
    swapped: bool


class MultiplicativityModel(BaseModel):
    holds: bool
    literal_holds: bool
    instances: List[MultiplicativityInstanceModel] = Field(default_factory=list)


class VerdictModel(BaseModel):
    status: Literal["Simple", "NotSimple", "Inconclusive"]
    certificate: List[str] = Field(default_factory=list)
    witness: Optional[SubspaceModel] = None
    witness_label: str = ""
    reasons: List[str] = Field(default_factory=list)
    notes: List[str] = Field(default_factory=list)
    orthogonal_pair: Optional[List[SubspaceModel]] = None


class SemidirectModel(BaseModel):
    dim: int
    hom_lie: IdentityReportModel
    embedding: str
    weights_match: bool
    message: str = ""


class Report(BaseModel):
    """Top-level report document; every field below ``validity`` is optional."""

    schema_version: Literal[1] = SCHEMA_VERSION
    algebra: str
    dim: int
    basis: List[str] = Field(default_factory=list)
    validity: List[IdentityReportModel] = Field(default_factory=list)
    J: Optional[SubspaceModel] = None
    decomposition: Optional[DecompositionModel] = None
    decomposition_error: Optional[str] = None
    split_checks: List[IdentityReportModel] = Field(default_factory=list)
    connection_classes: Optional[List[List[VectorText]]] = None
    connections: List[ConnectionModel] = Field(default_factory=list)
    structure: Optional[StructureModel] = None
    jsplit: Optional[JSplitModel] = None
    nj_classes: Optional[Dict[str, List[List[VectorText]]]] = None
    hypotheses: List[HypothesisModel] = Field(default_factory=list)
    multiplicativity: Optional[MultiplicativityModel] = None
    verdict: Optional[VerdictModel] = None
    semidirect: Optional[SemidirectModel] = None
    checks: List[IdentityReportModel] = Field(default_factory=list)
