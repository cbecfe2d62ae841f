"""Passive rates, the post-attack effective SNR, and the achievable-SNR envelope.

The relaying eavesdropper splits its received power (fraction ``rho`` relayed,
``1 - rho`` kept for decoding) and forwards the relayed branch scaled by a
complex coefficient ``v``. At fixed ``rho`` the destination SNR it can induce
sweeps a closed interval [gamma_d_min, gamma_d_max]; both endpoints have closed
forms and explicit attaining coefficients.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .channel import Scenario, abs2, wrap_phase


class PowerBudgetError(ValueError):
    """Relay control exceeds the eavesdropper's transmit power budget."""


@dataclass(frozen=True)
class RelayControl:
    """One eavesdropper action: power split ``rho`` and amplification ``v``."""

    rho: float
    v: complex

    def __post_init__(self) -> None:
        if not 0.0 <= self.rho <= 1.0:
            raise ValueError(f"rho must be in [0, 1], got {self.rho!r}")


@dataclass(frozen=True)
class Envelope:
    """One endpoint of the achievable SNR interval, with the coefficient attaining it."""

    gamma: float
    v_opt: complex


def _check_rho(rho: float) -> None:
    if not 0.0 <= rho <= 1.0:
        raise ValueError(f"rho must be in [0, 1], got {rho!r}")


def _as_rho_array(rho) -> np.ndarray:
    r = np.asarray(rho, dtype=float)
    if np.any(~np.isfinite(r)) or np.any(r < 0.0) or np.any(r > 1.0):
        raise ValueError("rho must be within [0, 1]")
    return r


def passive_rate_d(s: Scenario) -> float:
    """Rate of the legitimate link with no attack, log2(1 + Ps|h_sd|^2/sigma2)."""
    return math.log2(1.0 + s.ps_norm * abs2(s.h_sd))


def passive_rate_e(s: Scenario) -> float:
    """Rate decodable by a purely listening eavesdropper."""
    return math.log2(1.0 + s.ps_norm * abs2(s.h_se))


def passive_leakage(s: Scenario) -> float:
    """Leakage without any attack: the full rate if E can decode it, else zero."""
    rd = passive_rate_d(s)
    return rd if passive_rate_e(s) >= rd else 0.0


def eavesdropper_snr(s: Scenario, rho: float):
    """Decoding SNR at the eavesdropper when a fraction rho of power is relayed."""
    if np.ndim(rho) == 0:
        _check_rho(float(rho))
        return (1.0 - float(rho)) * abs2(s.h_se) * s.ps_norm
    return (1.0 - _as_rho_array(rho)) * abs2(s.h_se) * s.ps_norm


def relay_power_used(s: Scenario, control: RelayControl) -> float:
    """Transmit power |v|^2 (rho |h_se|^2 Ps + sigma2) spent by the relay branch."""
    return abs2(control.v) * (control.rho * abs2(s.h_se) * s.p_s + s.sigma2)


def v_magnitude_cap(s: Scenario, rho: float) -> float:
    """Largest |v| the power budget allows at a given rho."""
    _check_rho(rho)
    return math.sqrt(s.pe_norm / (rho * abs2(s.h_se) * s.ps_norm + 1.0))


def effective_snr_d(s: Scenario, control: RelayControl) -> float:
    """Destination SNR under a relay control.

    The relayed branch adds coherently with the direct path while the relay's
    own processing noise is re-amplified toward the destination:

        gamma = |h_sd + v sqrt(rho) h_se h_ed|^2 Ps / ((1 + |v|^2 |h_ed|^2) sigma2)

    Raises PowerBudgetError if the control spends more than ``p_e``.
    """
    used = relay_power_used(s, control)
    if used > s.p_e * (1.0 + 1e-9) + 1e-12:
        raise PowerBudgetError(
            f"relay power {used!r} exceeds the budget {s.p_e!r}")
    combined = s.h_sd + control.v * math.sqrt(control.rho) * s.h_se * s.h_ed
    return abs2(combined) * s.ps_norm / (1.0 + abs2(control.v) * abs2(s.h_ed))


def rho1(s: Scenario) -> float:
    """Split ratio above which the constructive optimum hits the power cap.

    Below rho1 the unconstrained stationary point of gamma over |v| is
    affordable; above it the budget binds. Returns 1 when |h_se| = 0 (the
    relay receives nothing, the cap never binds).
    """
    e2 = abs2(s.h_se)
    if e2 == 0.0:
        return 1.0
    x = 4.0 * s.ps_norm * s.pe_norm * abs2(s.h_sd) * abs2(s.h_ed)
    # x / (1 + sqrt(1 + x)) == -1 + sqrt(1 + x), free of cancellation for tiny x
    num = x / (1.0 + math.sqrt(1.0 + x))
    return min(1.0, num / (2.0 * e2 * s.ps_norm))


def rho2(s: Scenario) -> float:
    """Split ratio from which full destructive power can null the direct path.

    Equals |h_sd|^2 / (|h_se|^2 (|h_ed|^2 Pe - |h_sd|^2 Ps)) clipped to [0, 1];
    a zero or negative denominator (nulling unreachable at any rho) yields 1.
    """
    d2 = abs2(s.h_sd)
    denom = abs2(s.h_se) * (abs2(s.h_ed) * s.pe_norm - d2 * s.ps_norm)
    if denom <= 0.0:
        return 1.0
    c = d2 / denom
    return c if c <= 1.0 else 1.0


def gamma_d_max(s: Scenario, rho):
    """Upper achievable-SNR envelope at the destination (scalar or ndarray rho).

    For rho <= rho1 the interior stationary point gives (|h_sd|^2 + rho |h_se|^2) Ps;
    beyond rho1 the full-power coefficient gives
    (|h_sd| sqrt(1 + rho |h_se|^2 Ps) + |h_se||h_ed| sqrt(rho Pe))^2 Ps
      / (1 + rho |h_se|^2 Ps + |h_ed|^2 Pe).
    """
    r = _as_rho_array(rho)
    d2, e2, f2 = abs2(s.h_sd), abs2(s.h_se), abs2(s.h_ed)
    ps, pe = s.ps_norm, s.pe_norm
    below = (d2 + r * e2) * ps
    q = 1.0 + r * e2 * ps
    amp = np.sqrt(d2 * q) + np.sqrt(e2 * f2 * pe * r)
    above = amp * amp * ps / (q + f2 * pe)
    out = np.where(r <= rho1(s), below, above)
    return float(out) if out.ndim == 0 else out


def gamma_d_min(s: Scenario, rho):
    """Lower achievable-SNR envelope; exactly zero once the direct path can be nulled."""
    r = _as_rho_array(rho)
    d2, e2, f2 = abs2(s.h_sd), abs2(s.h_se), abs2(s.h_ed)
    ps, pe = s.ps_norm, s.pe_norm
    q = 1.0 + r * e2 * ps
    amp = np.sqrt(d2 * q) - np.sqrt(e2 * f2 * pe * r)
    below = amp * amp * ps / (q + f2 * pe)
    out = np.where(r <= rho2(s), below, 0.0)
    return float(out) if out.ndim == 0 else out


def _forward_phase(s: Scenario) -> float:
    # constructive alignment of the relayed branch with the direct path
    return wrap_phase(cmath.phase(s.h_sd) - cmath.phase(s.h_se) - cmath.phase(s.h_ed))


def snr_d_max(s: Scenario, rho: float) -> Envelope:
    """Constructive endpoint: interior stationary |v| clipped to the power cap."""
    gamma = gamma_d_max(s, rho)
    a = math.sqrt(abs2(s.h_sd))
    f2 = abs2(s.h_ed)
    b = math.sqrt(rho * abs2(s.h_se) * f2)
    cap = v_magnitude_cap(s, rho)
    if b == 0.0:
        # relayed branch carries nothing; any power only forwards noise
        t = 0.0
    elif a * f2 == 0.0:
        t = cap
    else:
        t = min(b / (a * f2), cap)
    return Envelope(gamma, cmath.rect(t, _forward_phase(s)))


def snr_d_min(s: Scenario, rho: float) -> Envelope:
    """Destructive endpoint: full power below rho2, exact signal nulling from rho2 on."""
    gamma = gamma_d_min(s, rho)
    a = math.sqrt(abs2(s.h_sd))
    b = math.sqrt(rho * abs2(s.h_se) * abs2(s.h_ed))
    cap = v_magnitude_cap(s, rho)
    if b == 0.0:
        t = cap if a > 0.0 else 0.0
    elif rho < rho2(s):
        t = cap
    else:
        t = min(a / b, cap)
    phase = wrap_phase(math.pi + cmath.phase(s.h_sd)
                       - cmath.phase(s.h_se) - cmath.phase(s.h_ed))
    return Envelope(gamma, cmath.rect(t, phase))
