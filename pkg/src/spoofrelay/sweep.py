"""Distance sweep of the collinear geometry: leakage with and without the attack."""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import rates
from .channel import GeometryConfig, Scenario, build_collinear_scenario
from .optimizer import AttackSolution, Strategy, solve_attack

CSV_HEADER = "d_se_m,passive_bps_hz,active_bps_hz,strategy,rho_star,v_mag,jam_power"


@dataclass(frozen=True)
class SweepConfig:
    """Geometry template plus the d_se range to sweep (start/stop/step, meters)."""

    d_sd: float = 1000.0
    carrier_hz: float = 1.8e9
    snr_d_db: float = 10.0
    pe_over_ps: float = 1.0
    min_distance_m: float = 1.0
    d_se_start: float = 50.0
    d_se_stop: float = 3000.0
    d_se_step: float = 5.0
    out: str | None = None

    def __post_init__(self) -> None:
        if not (math.isfinite(self.d_se_start) and self.d_se_start > 0.0):
            raise ValueError(f"d_se_start must be positive, got {self.d_se_start!r}")
        if not (math.isfinite(self.d_se_step) and self.d_se_step > 0.0):
            raise ValueError(f"d_se_step must be positive, got {self.d_se_step!r}")
        if not (math.isfinite(self.d_se_stop) and self.d_se_stop > self.d_se_start):
            raise ValueError("d_se_stop must exceed d_se_start")
        if len(self.distances()) < 2:
            raise ValueError("sweep must contain at least 2 points")

    def geometry_at(self, d_se: float) -> GeometryConfig:
        return GeometryConfig(d_sd=self.d_sd, d_se=d_se, carrier_hz=self.carrier_hz,
                              snr_d_db=self.snr_d_db, pe_over_ps=self.pe_over_ps,
                              min_distance_m=self.min_distance_m)

    def distances(self) -> list[float]:
        count = int(math.floor((self.d_se_stop - self.d_se_start) / self.d_se_step
                               + 1e-9)) + 1
        return [self.d_se_start + i * self.d_se_step for i in range(count)]


@dataclass(frozen=True)
class SweepRecord:
    """One sweep point: passive and attacked leakage plus the optimal control."""

    d_se: float
    passive_leakage: float
    active_leakage: float
    strategy: Strategy
    rho_star: float
    v_mag: float
    jam_power: float


def _record(d_se: float, s: Scenario, sol: AttackSolution) -> SweepRecord:
    return SweepRecord(
        d_se=d_se,
        passive_leakage=rates.passive_leakage(s),
        active_leakage=sol.leakage_bps_hz,
        strategy=sol.strategy,
        rho_star=sol.rho_star,
        v_mag=abs(sol.v_star),
        jam_power=sol.jam_power_used,
    )


def run_sweep(cfg: SweepConfig) -> list[SweepRecord]:
    """Solve the attack at every d_se of the configured range, ascending."""
    records = []
    for d_se in cfg.distances():
        s = build_collinear_scenario(cfg.geometry_at(d_se))
        records.append(_record(d_se, s, solve_attack(s)))
    return records


def strategy_regions(records: list[SweepRecord]) -> list[tuple[Strategy, float, float]]:
    """Contiguous runs of equal strategy as (strategy, first d_se, last d_se)."""
    if not records:
        raise ValueError("no sweep records")
    regions = []
    start = records[0]
    prev = records[0]
    for rec in records[1:]:
        if rec.strategy is not prev.strategy:
            regions.append((prev.strategy, start.d_se, prev.d_se))
            start = rec
        prev = rec
    regions.append((prev.strategy, start.d_se, prev.d_se))
    return regions


def format_csv_row(d_se: float, passive: float, active: float, strategy: str,
                   rho_star: float, v_mag: float, jam_power: float) -> str:
    """One CSV row, numeric fields at 9 significant digits."""
    return (f"{d_se:.9g},{passive:.9g},{active:.9g},{strategy},"
            f"{rho_star:.9g},{v_mag:.9g},{jam_power:.9g}")


def write_csv(records: list[SweepRecord], path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(CSV_HEADER + "\n")
        for r in records:
            fh.write(format_csv_row(r.d_se, r.passive_leakage, r.active_leakage,
                                    r.strategy.value, r.rho_star, r.v_mag,
                                    r.jam_power) + "\n")
