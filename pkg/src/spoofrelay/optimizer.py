"""Optimal relay strategy: case classification and the leakage-maximizing control.

The eavesdropper maximizes the rate it can both induce on the legitimate link
and still decode itself, i.e. the largest gamma_d subject to gamma_d <= gamma_e
and the power budget. Which envelope side matters is decided entirely by the
channel-strength ordering, giving three cases:

  1. |h_se|^2 > |h_sd|^2          constructive forwarding, unique crossing of
                                   gamma_d_max with gamma_e
  2. middle band                  pure jamming at rho = 0 with just enough
                                   power to pull the link down to gamma_e(0)
  3. |h_se|^2 below the jam floor destructive forwarding plus jamming; the
                                   smallest root of gamma_d_min = gamma_e, or
                                   no root at all (attack infeasible)
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import rates
from .channel import Scenario, abs2, wrap_phase

DEFAULT_N_SCAN = 4096


class Strategy(str, Enum):
    CONSTRUCTIVE = "constructive"
    JAMMING = "jamming"
    DESTRUCTIVE_JAMMING = "destructive_jamming"
    INFEASIBLE = "infeasible"


@dataclass(frozen=True)
class AttackSolution:
    """Solver output: the optimal control and the rates it achieves."""

    strategy: Strategy
    rho_star: float
    v_star: complex
    gamma_d: float
    gamma_e: float
    leakage_bps_hz: float
    residual: float
    jam_power_used: float


def classify_case(s: Scenario) -> Strategy:
    """Strategy class from the channel-strength ordering; boundaries go to jamming."""
    d2, e2 = abs2(s.h_sd), abs2(s.h_se)
    if e2 > d2:
        return Strategy.CONSTRUCTIVE
    if e2 >= d2 / (1.0 + abs2(s.h_ed) * s.pe_norm):
        return Strategy.JAMMING
    return Strategy.DESTRUCTIVE_JAMMING


def _bisect_to_machine(g, lo: float, hi: float, g_lo: float, g_hi: float,
                       max_iter: int = 200) -> float:
    """Bisection run to the floating-point floor of the bracket.

    g_lo and g_hi must straddle zero (one of them may be zero). Running to the
    representable floor keeps the returned root a pure function of the curve
    magnitudes, so residuals sit at ~|g'| * eps and phase rotations of the
    gains cannot move the result.
    """
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            break
        g_mid = g(mid)
        if g_mid == 0.0:
            return mid
        if (g_mid < 0.0) == (g_lo < 0.0):
            lo, g_lo = mid, g_mid
        else:
            hi, g_hi = mid, g_mid
    return lo if abs(g_lo) <= abs(g_hi) else hi


def _solution(strategy: Strategy, s: Scenario, rho: float, env: rates.Envelope) -> AttackSolution:
    ge = rates.eavesdropper_snr(s, rho)
    control = rates.RelayControl(rho, env.v_opt)
    return AttackSolution(
        strategy=strategy,
        rho_star=rho,
        v_star=env.v_opt,
        gamma_d=env.gamma,
        gamma_e=ge,
        leakage_bps_hz=math.log2(1.0 + env.gamma),
        residual=env.gamma - ge,
        jam_power_used=rates.relay_power_used(s, control),
    )


def solve_case1(s: Scenario) -> AttackSolution:
    """Constructive forwarding: root of gamma_d_max(rho) = gamma_e(rho) on [0, 1].

    gamma_d_max is nondecreasing and gamma_e strictly decreasing, so the
    difference has exactly one sign change; g(0) < 0 is guaranteed by the
    case condition |h_se|^2 > |h_sd|^2.
    """
    def g(r: float) -> float:
        return rates.gamma_d_max(s, r) - rates.eavesdropper_snr(s, r)

    g0, g1 = g(0.0), g(1.0)
    if not (g0 < 0.0 <= g1):
        raise RuntimeError(f"case-1 bracket violated: g(0)={g0!r}, g(1)={g1!r}")
    root = _bisect_to_machine(g, 0.0, 1.0, g0, g1)
    return _solution(Strategy.CONSTRUCTIVE, s, root, rates.snr_d_max(s, root))


def solve_case2(s: Scenario) -> AttackSolution:
    """Pure jamming: rho = 0 and only enough noise power to reach gamma_e(0).

    The needed normalized power is (|h_sd|^2/|h_se|^2 - 1)/|h_ed|^2, which the
    case's lower threshold guarantees is within budget. On the |h_se| = |h_sd|
    boundary no jamming is needed at all.
    """
    d2, e2, f2 = abs2(s.h_sd), abs2(s.h_se), abs2(s.h_ed)
    if e2 > 0.0 and f2 > 0.0 and d2 > e2:
        jam_norm = (d2 / e2 - 1.0) / f2
    else:
        jam_norm = 0.0
    phase = wrap_phase(math.pi + cmath.phase(s.h_sd)
                       - cmath.phase(s.h_se) - cmath.phase(s.h_ed))
    v = cmath.rect(math.sqrt(jam_norm), phase)
    ge = e2 * s.ps_norm
    control = rates.RelayControl(0.0, v)
    return AttackSolution(
        strategy=Strategy.JAMMING,
        rho_star=0.0,
        v_star=v,
        gamma_d=ge,
        gamma_e=ge,
        leakage_bps_hz=math.log2(1.0 + ge),
        residual=0.0,
        jam_power_used=rates.relay_power_used(s, control),
    )


def solve_case3(s: Scenario, n_scan: int = DEFAULT_N_SCAN) -> AttackSolution:
    """Destructive forwarding plus jamming, or infeasible.

    gamma_d_min starts above gamma_e here; the attack works only where the
    lower envelope dips to meet it. The scan finds the first sign change of
    g = gamma_d_min - gamma_e (the smallest root maximizes gamma_e, which is
    decreasing); no sign change on the grid means the attack cannot force
    decodability at any split.
    """
    if n_scan < 2:
        raise ValueError(f"n_scan must be at least 2, got {n_scan!r}")
    rhos = np.linspace(0.0, 1.0, n_scan)
    g_grid = rates.gamma_d_min(s, rhos) - rates.eavesdropper_snr(s, rhos)
    if g_grid[0] <= 0.0:
        # only reachable on the float edge of the case-2 boundary
        root = 0.0
    else:
        crossings = np.nonzero(g_grid <= 0.0)[0]
        if crossings.size == 0:
            return AttackSolution(Strategy.INFEASIBLE, 0.0, 0j,
                                  0.0, 0.0, 0.0, 0.0, 0.0)
        i = int(crossings[0])

        def g(r: float) -> float:
            return rates.gamma_d_min(s, r) - rates.eavesdropper_snr(s, r)

        root = _bisect_to_machine(g, float(rhos[i - 1]), float(rhos[i]),
                                  float(g_grid[i - 1]), float(g_grid[i]))
    return _solution(Strategy.DESTRUCTIVE_JAMMING, s, root, rates.snr_d_min(s, root))


def solve_attack(s: Scenario, n_scan: int = DEFAULT_N_SCAN) -> AttackSolution:
    """Solve the leakage maximization for a scenario by case dispatch."""
    case = classify_case(s)
    if case is Strategy.CONSTRUCTIVE:
        return solve_case1(s)
    if case is Strategy.JAMMING:
        return solve_case2(s)
    return solve_case3(s, n_scan=n_scan)


def case3_quartic_roots(s: Scenario) -> list[float]:
    """Candidate case-3 crossings via the squared-radical quartic (cross-check).

    Isolating the radical in gamma_d_min(rho) = gamma_e(rho) and squaring gives
    A(rho)^2 = 4 |h_sd|^2 |h_se|^2 |h_ed|^2 Pe rho (1 + rho |h_se|^2 Ps) with
    A quadratic, i.e. a quartic in rho. Squaring introduces a spurious branch,
    removed by requiring A(rho) >= 0. Returns real candidates in [0, 1],
    ascending; roots come from the companion-matrix eigenvalues.
    """
    d2, e2, f2 = abs2(s.h_sd), abs2(s.h_se), abs2(s.h_ed)
    ps, pe = s.ps_norm, s.pe_norm
    a2 = e2 * e2 * ps
    a1 = e2 * (d2 * ps + 2.0 * f2 * pe - e2 * ps + 1.0)
    a0 = d2 - e2 * (1.0 + f2 * pe)
    k = 4.0 * d2 * e2 * f2 * pe
    coeffs = [a2 * a2,
              2.0 * a2 * a1,
              a1 * a1 + 2.0 * a2 * a0 - k * e2 * ps,
              2.0 * a1 * a0 - k,
              a0 * a0]
    if not any(coeffs):
        return []
    out = []
    for z in np.roots(coeffs):
        if abs(z.imag) > 1e-8 * (1.0 + abs(z.real)):
            continue
        r = min(max(float(z.real), 0.0), 1.0)
        if float(z.real) < -1e-12 or float(z.real) > 1.0 + 1e-12:
            continue
        if a0 + a1 * r + a2 * r * r >= -1e-9 * (1.0 + abs(a0)):
            out.append(r)
    return sorted(out)
