"""Acceptance gate: every shipping criterion, one printed PASS/FAIL line each.

Run with `pytest -v` (the pass/fail lines are captured stdout, surfaced by the
`-rP` report option configured in pyproject.toml).
"""

import cmath
import math
import time

import numpy as np
import pytest

from conftest import scenario_from_mags
from spoofrelay import (Scenario, Strategy, SweepConfig,
                        build_collinear_scenario, check_envelope_containment,
                        check_monte_carlo, check_oracle_agreement,
                        classify_case, gamma_d_min, philox_generator,
                        random_scenario, rho2, run_sweep, solve_attack,
                        strategy_regions)

PLATEAU_BPS_HZ = math.log2(11.0)


def _report(num, ok, detail):
    print(f"[criterion {num:02d}] {'PASS' if ok else 'FAIL'}: {detail}")
    assert ok, f"criterion {num:02d}: {detail}"


@pytest.fixture(scope="module")
def sweep_run():
    start = time.perf_counter()
    records = run_sweep(SweepConfig())
    return records, time.perf_counter() - start


@pytest.fixture(scope="module")
def random_suite():
    rng = philox_generator(42)
    scenarios = [random_scenario(rng) for _ in range(100)]
    return [(s, solve_attack(s)) for s in scenarios]


def test_criterion_01_passive_plateau(sweep_run):
    records, elapsed = sweep_run
    inside = [r for r in records if r.d_se <= 1000.0]
    beyond = [r for r in records if r.d_se > 1000.0]
    worst = max(abs(r.passive_leakage - PLATEAU_BPS_HZ) for r in inside)
    zero_beyond = all(r.passive_leakage == 0.0 for r in beyond)
    ok = (len(records) == 591 and worst <= 1e-9 and zero_beyond
          and elapsed < 5.0)
    _report(1, ok,
            f"plateau error {worst:.3g} (tol 1e-9) on {len(inside)} points, "
            f"zero beyond 1000 m: {zero_beyond}, "
            f"{len(records)} records in {elapsed:.2f} s (limit 5 s)")


def test_criterion_02_active_dominance(sweep_run):
    records, _ = sweep_run
    floor = min(r.active_leakage - r.passive_leakage for r in records)
    shortfalls = [(r.d_se, r.active_leakage - r.passive_leakage)
                  for r in records
                  if 50.0 <= r.d_se <= 995.0
                  and r.active_leakage - r.passive_leakage < 0.01]
    ok = floor >= -1e-12 and not shortfalls
    where = ", ".join(f"{d:g} m (margin {m:.6g})" for d, m in shortfalls) \
        or "none"
    _report(2, ok,
            f"min active-passive {floor:.3g} (floor -1e-12); "
            f"points in [50, 995] m with margin < 0.01: {where}")


def test_criterion_03_strategy_regions(sweep_run):
    records, _ = sweep_run
    regions = strategy_regions(records)
    order = [r[0] for r in regions]
    expected = [Strategy.CONSTRUCTIVE, Strategy.JAMMING,
                Strategy.DESTRUCTIVE_JAMMING, Strategy.INFEASIBLE]
    handoff = (regions[0][2] == 995.0 and regions[1][1] == 1000.0) \
        if len(regions) >= 2 else False
    ok = order == expected and handoff
    _report(3, ok,
            f"regions {[(r[0].value, r[1], r[2]) for r in regions]}; "
            f"constructive hands over to jamming at 1000 m: {handoff}")


def test_criterion_04_oracle_agreement_and_envelopes():
    agreement = check_oracle_agreement(seed=42, n_scenarios=100,
                                       n_rho=256, n_mag=256, n_phase=64)
    containment = check_envelope_containment(seed=42, n_scenarios=100,
                                             n_controls=10_000,
                                             n_rho_samples=8)
    gap = agreement.detail["max_abs_gap_bps_hz"]
    violations = containment.detail["violations"]
    elapsed = agreement.detail["elapsed_s"] + containment.detail["elapsed_s"]
    ok = (agreement.passed and containment.passed and gap <= 0.02
          and violations == 0 and elapsed < 600.0)
    _report(4, ok,
            f"max |solver-oracle| {gap:.6g} bps/Hz (tol 0.02) over 100 "
            f"scenarios at grid (256, 256, 64); envelope violations "
            f"{violations} across 100 x 8 x 10000 controls; "
            f"{elapsed:.1f} s (limit 600 s)")


def test_criterion_05_closed_form_power_split():
    sol = solve_attack(scenario_from_mags(1.0, 4.0, 0.0, 10.0, 10.0))
    rho_err = abs(sol.rho_star - 0.75)
    leak_err = abs(sol.leakage_bps_hz - PLATEAU_BPS_HZ)
    ok = rho_err <= 1e-9 and leak_err <= 1e-9
    _report(5, ok,
            f"relay-free split rho*={sol.rho_star!r} (want 0.75, err "
            f"{rho_err:.3g}), leakage err {leak_err:.3g} (tol 1e-9)")


def test_criterion_06_pure_jamming_solution():
    sol = solve_attack(scenario_from_mags(1.0, 0.5, 1.0, 10.0, 10.0))
    errs = {
        "rho": abs(sol.rho_star),
        "jam": abs(sol.jam_power_used - 1.0),
        "leak": abs(sol.leakage_bps_hz - math.log2(6.0)),
        "gamma_d": abs(sol.gamma_d - 5.0),
        "gamma_e": abs(sol.gamma_e - 5.0),
    }
    ok = sol.strategy is Strategy.JAMMING and max(errs.values()) <= 1e-9
    _report(6, ok,
            "jamming solution errors " +
            ", ".join(f"{k}={v:.3g}" for k, v in errs.items()) +
            " (tol 1e-9 each)")


def test_criterion_07_balancing_residuals(sweep_run, random_suite):
    records, _ = sweep_run
    cfg = SweepConfig()
    solutions = [sol for _, sol in random_suite]
    solutions += [solve_attack(build_collinear_scenario(cfg.geometry_at(r.d_se)))
                  for r in records]
    solutions += [solve_attack(scenario_from_mags(1.0, 4.0, 1.0, 10.0, 10.0)),
                  solve_attack(scenario_from_mags(1.0, 9e-5, 1.0, 100.0, 1e4))]
    balanced = [s for s in solutions
                if s.strategy in (Strategy.CONSTRUCTIVE,
                                  Strategy.DESTRUCTIVE_JAMMING)
                and s.leakage_bps_hz > 0.0]
    worst = max(abs(s.residual) / (1.0 + s.gamma_e) for s in balanced)
    ok = worst <= 1e-9
    _report(7, ok,
            f"worst normalized residual {worst:.3g} (tol 1e-9) over "
            f"{len(balanced)} balanced solutions")


def test_criterion_08_symbol_level_monte_carlo():
    n = 1_000_000
    mc = check_monte_carlo(seed=42, n_pairs=20, n_symbols=n)
    tol = 5.0 * math.sqrt(2.0 / n)
    worst = mc.detail["max_relative_error"]
    ok = mc.passed and worst <= tol
    _report(8, ok,
            f"max relative SNR error {worst:.6g} over 20 pairs of "
            f"{n} symbols (tol {tol:.6g})")


def test_criterion_09_phase_reference_invariance():
    rng = philox_generator(42_900_000)
    worst = 0.0
    for _ in range(100):
        s = random_scenario(rng)
        a, b, c = rng.uniform(-math.pi, math.pi, size=3)
        rotated = Scenario(s.h_sd * cmath.exp(1j * a),
                           s.h_se * cmath.exp(1j * b),
                           s.h_ed * cmath.exp(1j * c),
                           s.p_s, s.p_e, s.sigma2)
        shift = abs(solve_attack(rotated).leakage_bps_hz
                    - solve_attack(s).leakage_bps_hz)
        worst = max(worst, shift)
    ok = worst <= 1e-10
    _report(9, ok,
            f"max leakage shift under unit rotations {worst:.3g} "
            f"(tol 1e-10) over 100 trials")


def test_criterion_10_weak_tap_cannot_be_nulled():
    rng = philox_generator(42)
    found, draws = [], 0
    while len(found) < 100 and draws < 10_000:
        s = random_scenario(rng)
        draws += 1
        if classify_case(s) is Strategy.DESTRUCTIVE_JAMMING:
            found.append(s)
    grid = np.linspace(0.0, 1.0, 1024)
    all_clipped = all(rho2(s) == 1.0 for s in found)
    floor = min(float(np.min(gamma_d_min(s, grid))) for s in found)
    ok = len(found) == 100 and all_clipped and floor > 0.0
    _report(10, ok,
            f"{len(found)} weak-tap scenarios in {draws} draws; "
            f"rho2 clipped to 1 on all: {all_clipped}; "
            f"min-envelope floor {floor:.3g} (must stay positive)")
