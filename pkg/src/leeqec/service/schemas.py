"""Wire schemas shared by the HTTP service and the CLI.

Types are validated here; semantic preconditions (primality, guard sizes,
containment) stay in the core modules and surface as 422 responses.
"""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel


class SphereRequest(BaseModel):
    p: int
    n: int
    d: int
    method: Literal["formula", "dp", "bound", "all"] = "all"


class SphereResponse(BaseModel):
    p: int
    n: int
    d: int
    formula: Optional[int] = None  # closed form; None when d >= p/2 or not asked
    dp: Optional[int] = None
    bound: Optional[int] = None


class GvRequest(BaseModel):
    p: int
    n: int
    k1: int
    k2: int
    d_x: int
    d_z: int
    tightened: bool = False


class GvResponse(BaseModel):
    p: int
    n: int
    k1: int
    k2: int
    d_x: int
    d_z: int
    tightened: bool
    lhs_numerator: int
    lhs_denominator: int
    lhs_float: float
    exists: bool
    code_params: str


class GvScanRequest(BaseModel):
    p: int
    n: int
    d_x: int
    d_z: int
    tightened: bool = False


class GvScanResponse(BaseModel):
    found: bool
    best: Optional[GvResponse] = None
    dimension: Optional[int] = None


class RatesRequest(BaseModel):
    p: int
    delta_from: float = 0.0
    delta_to: float = 0.5
    delta_step: float = 0.01


class RatePointModel(BaseModel):
    delta: float
    rate_hamming: float
    rate_lee: float


class RatesResponse(BaseModel):
    p: int
    points: list[RatePointModel]
    csv: str


class ConstructRequest(BaseModel):
    p: int
    n: int
    t: int
    enumerate_weights: bool = True


class ConstructResponse(BaseModel):
    p: int
    n: int
    t: int
    g: list[int]  # coefficients, lowest degree first
    h: list[int]
    g_pretty: str
    h_pretty: str
    deg_g: int
    dim_c: int
    logical_dimension: int
    designed_lee_distance: int
    dual_min_lee_weight: Optional[int] = None  # None: enumeration skipped
    d_x: Optional[int] = None  # None: skipped or unbounded (see flags)
    d_z: Optional[int] = None
    weights_unbounded: bool = False
    weights_skipped: bool = False
    stabilizer_text: str
    report_text: str
    report_csv: str


class DecodeCheckRequest(BaseModel):
    p: int
    n: int
    t: int


class DecodeCheckResponse(BaseModel):
    p: int
    n: int
    t: int
    table_entries: int
    exact_roundtrips: int
    all_exact: bool
    message: str


class SimulateRequest(BaseModel):
    p: int
    n: int
    t: int
    alpha_c: float
    beta_c: float
    trials: int
    seed: int


class SimulateResponse(BaseModel):
    alpha_c: float
    beta_c: float
    trials: int
    seed: int
    fail_x: int
    fail_z: int
    fail_joint: int
    rate_x: float
    rate_z: float
    rate_joint: float
    predicted_joint: float
    ci_x: float
    ci_z: float
    csv: str


class WitnessRequest(BaseModel):
    p: int
    n: int
    k1: int
    k2: int
    d_x: int
    d_z: int
    trials: int = 200
    seed: int = 1


class WitnessResponse(BaseModel):
    found: bool
    trials: int
    trials_used: int
    d_x: Optional[int] = None  # enumerated weights of the witness
    d_z: Optional[int] = None
    c1_text: Optional[str] = None
    c2_text: Optional[str] = None


class HealthResponse(BaseModel):
    status: str
    version: str
