from typing import Dict, List, Optional

from pydantic import BaseModel

from lrbspectra.core.config import SCHEMA_VERSION


class Report(BaseModel):
    schema_version: int = SCHEMA_VERSION


# ============= Semigroup =============


class CounterexampleOut(BaseModel):
    law: str
    x: str
    y: str


class DiagnosticOut(BaseModel):
    ok: bool
    kind: Optional[str] = None
    indices: List[int] = []
    message: str


class LawReportOut(Report):
    valid: bool
    semigroup: DiagnosticOut
    is_band: Optional[bool] = None
    is_left_regular: Optional[bool] = None
    counterexamples: List[CounterexampleOut] = []


# ============= Lattice =============


class IdealOut(BaseModel):
    id: int
    members: List[str]


class LatticeOut(Report):
    m: int
    ideals: List[IdealOut]
    covers: List[List[int]]
    top: int
    bottom: int
    sigma: List[int]
    descending: List[int]
    key_fact_ok: bool
    sigma_homomorphism_ok: bool


# ============= Spectrum =============


class IdealLambdaOut(BaseModel):
    id: int
    members: List[str]
    value: str


class ViolationOut(BaseModel):
    upper: int
    lower: int


class SpectrumReportOut(Report):
    side: str
    n: int
    lambdas: List[IdealLambdaOut]
    distinct: List[str]
    hypothesis_ok: bool
    violation: Optional[ViolationOut] = None
    minimal_polynomial: List[str]
    minimal_polynomial_text: str
    annihilation_ok: Optional[bool] = None
    lemma1_ok: bool
    lemma2_ok: Optional[bool] = None
    induction_ok: Optional[bool] = None
    minimal_poly_divides_product: Optional[bool] = None
    diagonalizable: bool
    kernel_dims: Dict[str, int]
    notes: List[str]


# ============= Walk =============


class RestrictedOut(BaseModel):
    labels: List[str]
    lambdas: List[IdealLambdaOut]
    hypothesis_ok: bool
    monotonicity_ok: bool
    monotonicity_witness: Optional[ViolationOut] = None
    diagonalizable: bool
    minimal_polynomial: List[str]


class WalkReportOut(Report):
    states: str
    state_labels: List[str]
    matrix: List[List[str]]
    generates_all: bool
    lambdas: List[IdealLambdaOut]
    monotonicity_ok: bool
    monotonicity_witness: Optional[ViolationOut] = None
    annihilation_ok: Optional[bool] = None
    kernel_dims: Dict[str, int]
    restricted: Optional[RestrictedOut] = None
    notes: List[str]


# ============= Ledger =============


class LedgerEntryOut(BaseModel):
    id: int
    command: str
    input_digest: str
    report_digest: str
    exit_code: int
    created_at: str


class LedgerOut(Report):
    total_records: int
    records: List[LedgerEntryOut]


class LedgerVerifyOut(Report):
    report_digest: str
    recorded: bool
    record: Optional[LedgerEntryOut] = None
