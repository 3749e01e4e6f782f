"""Request/response models shared by the HTTP service and the CLI.

Every runner takes one request model and returns one report model; both are
plain data, so a run is reproducible from its serialized request alone.
"""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

CURVATURE_LABELS = {"hyperbolic": -1, "flat": 0, "spherical": 1}


class SpaceSpec(BaseModel):
    curvature: Literal["hyperbolic", "flat", "spherical"]
    n: int = Field(ge=2, le=16)

    @property
    def c(self) -> int:
        return CURVATURE_LABELS[self.curvature]


class ProfileSpec(BaseModel):
    breakpoints: list[float] = Field(min_length=2)
    values: list[float] = Field(min_length=1)

    @model_validator(mode="after")
    def _consistent(self) -> "ProfileSpec":
        if len(self.values) != len(self.breakpoints) - 1:
            raise ValueError("need exactly one value per breakpoint gap")
        if self.breakpoints[0] != 0.0:
            raise ValueError("breakpoints must start at 0")
        if any(b <= a for a, b in zip(self.breakpoints, self.breakpoints[1:])):
            raise ValueError("breakpoints must be strictly increasing")
        return self


class GridSpec(BaseModel):
    """Either an explicit list of offsets or a uniform range."""

    points: Optional[list[float]] = None
    start: float = 0.0
    stop: Optional[float] = None
    count: int = Field(default=8, ge=1, le=10_000)

    def resolve(self) -> list[float]:
        if self.points is not None:
            return list(self.points)
        if self.stop is None:
            raise ValueError("grid needs either explicit points or a stop value")
        if self.count == 1:
            return [self.start]
        step = (self.stop - self.start) / (self.count - 1)
        return [self.start + i * step for i in range(self.count)]


class IdentitiesRequest(BaseModel):
    samples: int = Field(default=2000, ge=1, le=200_000)
    seed: int = 0
    tol: float = Field(default=1e-12, gt=0)
    self_test: bool = False


class IdentityCell(BaseModel):
    curvature: str
    max_identity_residual: float
    max_pythagoras_gap: float


class IdentitiesReport(BaseModel):
    cells: list[IdentityCell]
    max_residual: float
    tol: float
    passed: bool


class TransformRequest(BaseModel):
    space: SpaceSpec
    k: int = Field(ge=1)
    profile: ProfileSpec
    d_grid: GridSpec
    tol: float = Field(default=1e-8, gt=0)
    seed: int = 0


class TransformRow(BaseModel):
    d: float
    raw: float
    weighted: float
    oracle_raw: float
    abs_diff: float


class TransformReport(BaseModel):
    rows: list[TransformRow]
    max_abs_diff: float
    tol: float
    passed: bool


class EndpointRequest(BaseModel):
    space: SpaceSpec
    k: int = Field(ge=1)
    n_profiles: int = Field(default=10, ge=1, le=500)
    seed: int = 0
    scale_family: list[float] = Field(default=[0.5, 1.0, 2.0, 4.0, 8.0])
    p_test: Optional[float] = Field(default=None, gt=0)

    @field_validator("scale_family")
    @classmethod
    def _positive(cls, v: list[float]) -> list[float]:
        if any(x <= 0 for x in v):
            raise ValueError("scale family radii must be positive")
        return v


class EndpointCurveRow(BaseModel):
    profile_index: int
    d: float
    ratio: Optional[float]


class EndpointReport(BaseModel):
    p_endpoint: float
    curves: list[EndpointCurveRow]
    family_max_ratio: float
    probe_p_test: float
    probe_ratios: list[float]
    probe_divergent: bool
    passed: bool


class LemmaRequest(BaseModel):
    curvatures: list[Literal["hyperbolic", "flat", "spherical"]] = Field(
        default=["hyperbolic", "flat", "spherical"])
    p_values: list[float] = Field(default=[1.0, 1.5, 2.0, 3.0])
    eta_values: list[float] = Field(default=[0.5, 1.0, 2.0])
    n_cases: int = Field(default=200, ge=1, le=5000)
    seed: int = 0
    drift_tol: float = Field(default=0.05, gt=0)

    @field_validator("p_values")
    @classmethod
    def _p_ok(cls, v: list[float]) -> list[float]:
        if any(p < 1 for p in v):
            raise ValueError("every p must be >= 1")
        return v

    @field_validator("eta_values")
    @classmethod
    def _eta_ok(cls, v: list[float]) -> list[float]:
        if any(e <= 0 for e in v):
            raise ValueError("every eta must be > 0")
        return v


class LemmaCell(BaseModel):
    curvature: str
    p: float
    eta1: float
    eta2: float
    max_ratio: float
    drift: float
    stable: bool


class LemmaReport(BaseModel):
    cells: list[LemmaCell]
    max_ratio: float
    passed: bool


class HypergeoRequest(BaseModel):
    samples: int = Field(default=60, ge=1, le=5000)
    seed: int = 0
    tol: float = Field(default=1e-9, gt=0)


class HypergeoReport(BaseModel):
    max_series_gap: float
    max_reduction_gap: float
    max_pfaff_residual: float
    max_f1_transform_residual: float
    max_route_discrepancy: float
    warnings: list[str]
    tol: float
    passed: bool


class RunConfig(BaseModel):
    """Top-level configuration document: one optional section per command."""

    seed: Optional[int] = None
    tol: Optional[float] = Field(default=None, gt=0)
    identities: Optional[IdentitiesRequest] = None
    transform: Optional[TransformRequest] = None
    endpoint: Optional[EndpointRequest] = None
    lemma: Optional[LemmaRequest] = None
    hypergeo: Optional[HypergeoRequest] = None
