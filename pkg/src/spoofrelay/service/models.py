"""Request and response schemas for the HTTP endpoints.

Field names follow the CSV conventions of the sweep output so the service,
the CLI and the experiment files all serialize results the same way; angles
are radians in (-pi, pi].
"""

from __future__ import annotations

import cmath
from typing import Optional

from pydantic import BaseModel, Field, model_validator

from .. import rates
from ..channel import GeometryConfig, Scenario
from ..optimizer import AttackSolution
from ..sweep import SweepConfig, SweepRecord
from ..verify import VerifyCheck


class ScenarioModel(BaseModel):
    h_sd_re: float
    h_sd_im: float
    h_se_re: float
    h_se_im: float
    h_ed_re: float
    h_ed_im: float
    p_s: float = Field(gt=0.0)
    p_e: float = Field(ge=0.0)
    sigma2: float = Field(gt=0.0)

    def to_scenario(self) -> Scenario:
        return Scenario(
            h_sd=complex(self.h_sd_re, self.h_sd_im),
            h_se=complex(self.h_se_re, self.h_se_im),
            h_ed=complex(self.h_ed_re, self.h_ed_im),
            p_s=self.p_s, p_e=self.p_e, sigma2=self.sigma2,
        )

    @classmethod
    def from_scenario(cls, s: Scenario) -> "ScenarioModel":
        return cls(h_sd_re=s.h_sd.real, h_sd_im=s.h_sd.imag,
                   h_se_re=s.h_se.real, h_se_im=s.h_se.imag,
                   h_ed_re=s.h_ed.real, h_ed_im=s.h_ed.imag,
                   p_s=s.p_s, p_e=s.p_e, sigma2=s.sigma2)


class GeometryModel(BaseModel):
    d_sd: float = Field(gt=0.0)
    d_se: float = Field(gt=0.0)
    carrier_hz: float = Field(gt=0.0)
    snr_d_db: float
    pe_over_ps: float = Field(ge=0.0)
    min_distance_m: float = Field(default=1.0, gt=0.0)

    def to_geometry(self) -> GeometryConfig:
        return GeometryConfig(d_sd=self.d_sd, d_se=self.d_se,
                              carrier_hz=self.carrier_hz,
                              snr_d_db=self.snr_d_db,
                              pe_over_ps=self.pe_over_ps,
                              min_distance_m=self.min_distance_m)


class SolveRequest(BaseModel):
    """Exactly one of ``scenario`` (explicit gains) or ``geometry`` (distances)."""

    scenario: Optional[ScenarioModel] = None
    geometry: Optional[GeometryModel] = None

    @model_validator(mode="after")
    def _exactly_one_input(self) -> "SolveRequest":
        if (self.scenario is None) == (self.geometry is None):
            raise ValueError("provide exactly one of scenario or geometry")
        return self


class SolveResponse(BaseModel):
    strategy: str
    rho_star: float
    v_mag: float
    v_phase_rad: float
    gamma_d: float
    gamma_e: float
    passive_bps_hz: float
    active_bps_hz: float
    residual: float
    jam_power: float

    @classmethod
    def from_solution(cls, s: Scenario, sol: AttackSolution) -> "SolveResponse":
        return cls(
            strategy=sol.strategy.value,
            rho_star=sol.rho_star,
            v_mag=abs(sol.v_star),
            v_phase_rad=cmath.phase(sol.v_star),
            gamma_d=sol.gamma_d,
            gamma_e=sol.gamma_e,
            passive_bps_hz=rates.passive_leakage(s),
            active_bps_hz=sol.leakage_bps_hz,
            residual=sol.residual,
            jam_power=sol.jam_power_used,
        )


class SweepRequest(BaseModel):
    """Sweep configuration; the defaults reproduce the stock experiment."""

    d_sd: float = Field(default=1000.0, gt=0.0)
    carrier_hz: float = Field(default=1.8e9, gt=0.0)
    snr_d_db: float = 10.0
    pe_over_ps: float = Field(default=1.0, ge=0.0)
    min_distance_m: float = Field(default=1.0, gt=0.0)
    d_se_start: float = Field(default=50.0, gt=0.0)
    d_se_stop: float = 3000.0
    d_se_step: float = Field(default=5.0, gt=0.0)

    def to_config(self) -> SweepConfig:
        return SweepConfig(d_sd=self.d_sd, carrier_hz=self.carrier_hz,
                           snr_d_db=self.snr_d_db,
                           pe_over_ps=self.pe_over_ps,
                           min_distance_m=self.min_distance_m,
                           d_se_start=self.d_se_start,
                           d_se_stop=self.d_se_stop,
                           d_se_step=self.d_se_step)


class SweepRecordModel(BaseModel):
    d_se_m: float
    passive_bps_hz: float
    active_bps_hz: float
    strategy: str
    rho_star: float
    v_mag: float
    jam_power: float

    @classmethod
    def from_record(cls, r: SweepRecord) -> "SweepRecordModel":
        return cls(d_se_m=r.d_se, passive_bps_hz=r.passive_leakage,
                   active_bps_hz=r.active_leakage, strategy=r.strategy.value,
                   rho_star=r.rho_star, v_mag=r.v_mag, jam_power=r.jam_power)


class RegionModel(BaseModel):
    strategy: str
    d_se_first_m: float
    d_se_last_m: float


class SweepResponse(BaseModel):
    records: list[SweepRecordModel]
    regions: list[RegionModel]
    max_active_bps_hz: float
    max_active_d_se_m: float


class VerifyRequest(BaseModel):
    seed: int = Field(default=42, ge=0)
    scenarios: int = Field(default=100, ge=1)
    n_rho: int = Field(default=256, ge=2)
    n_mag: int = Field(default=256, ge=2)
    n_phase: int = Field(default=64, ge=2)
    envelope_controls: int = Field(default=10_000, ge=1)
    envelope_rho_count: int = Field(default=8, ge=2)
    mc_pairs: int = Field(default=5, ge=1)
    mc_symbols: int = Field(default=100_000, ge=10_000)


class VerifyCheckModel(BaseModel):
    name: str
    passed: bool
    detail: dict
    counterexample: Optional[dict] = None

    @classmethod
    def from_check(cls, check: VerifyCheck) -> "VerifyCheckModel":
        return cls(name=check.name, passed=check.passed, detail=check.detail,
                   counterexample=check.counterexample)


class VerifyResponse(BaseModel):
    passed: bool
    checks: list[VerifyCheckModel]
