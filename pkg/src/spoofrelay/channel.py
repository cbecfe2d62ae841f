"""Free-space link geometry and the channel/power description of an attack scenario."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

SPEED_OF_LIGHT = 299_792_458.0  # m/s


def abs2(z: complex) -> float:
    """Squared magnitude |z|^2 without the square root."""
    return z.real * z.real + z.imag * z.imag


def wrap_phase(phi: float) -> float:
    """Wrap an angle in radians into the half-open interval (-pi, pi]."""
    w = math.remainder(phi, 2.0 * math.pi)
    if w <= -math.pi:
        w += 2.0 * math.pi
    return w


def _require_finite(name: str, value: float) -> None:
    if not math.isfinite(value):
        raise ValueError(f"{name} must be finite, got {value!r}")


@dataclass(frozen=True)
class Scenario:
    """Complex gains and powers of one source/destination/eavesdropper layout.

    Parameters
    ----------
    h_sd, h_se, h_ed : complex
        Baseband gains of the source-destination, source-eavesdropper and
        eavesdropper-destination links.
    p_s, p_e : float
        Source transmit power and eavesdropper transmit power budget, in the
        same unit as the noise power.
    sigma2 : float
        Noise power at both receivers. All SNR formulas use the
        noise-normalized ratios ``ps_norm`` and ``pe_norm``.
    """

    h_sd: complex
    h_se: complex
    h_ed: complex
    p_s: float
    p_e: float
    sigma2: float = 1.0

    def __post_init__(self) -> None:
        for name in ("h_sd", "h_se", "h_ed"):
            z = getattr(self, name)
            if not (math.isfinite(z.real) and math.isfinite(z.imag)):
                raise ValueError(f"{name} must have finite re/im parts, got {z!r}")
        _require_finite("p_s", self.p_s)
        _require_finite("p_e", self.p_e)
        _require_finite("sigma2", self.sigma2)
        if self.p_s <= 0.0:
            raise ValueError(f"p_s must be positive, got {self.p_s!r}")
        if self.p_e < 0.0:
            raise ValueError(f"p_e must be nonnegative, got {self.p_e!r}")
        if self.sigma2 <= 0.0:
            raise ValueError(f"sigma2 must be positive, got {self.sigma2!r}")

    @property
    def ps_norm(self) -> float:
        """Source power over noise power."""
        return self.p_s / self.sigma2

    @property
    def pe_norm(self) -> float:
        """Eavesdropper power budget over noise power."""
        return self.p_e / self.sigma2


@dataclass(frozen=True)
class GeometryConfig:
    """Collinear S--E--D layout with transmit power set from a target receive SNR.

    The eavesdropper sits on the S-D line at distance ``d_se`` from the source;
    its distance to the destination is |d_se - d_sd|, clamped from below by
    ``min_distance_m`` so co-located nodes keep a finite gain.
    """

    d_sd: float
    d_se: float
    carrier_hz: float
    snr_d_db: float
    pe_over_ps: float = 1.0
    min_distance_m: float = 1.0

    def __post_init__(self) -> None:
        for name in ("d_sd", "d_se", "carrier_hz", "min_distance_m"):
            value = getattr(self, name)
            _require_finite(name, value)
            if value <= 0.0:
                raise ValueError(f"{name} must be positive, got {value!r}")
        _require_finite("snr_d_db", self.snr_d_db)
        _require_finite("pe_over_ps", self.pe_over_ps)
        if self.pe_over_ps < 0.0:
            raise ValueError(f"pe_over_ps must be nonnegative, got {self.pe_over_ps!r}")


def friis_power_gain(d: float, carrier_hz: float) -> float:
    """Free-space power gain (lambda / (4 pi d))^2 of an isotropic link."""
    if not (math.isfinite(d) and d > 0.0):
        raise ValueError(f"distance must be positive, got {d!r}")
    if not (math.isfinite(carrier_hz) and carrier_hz > 0.0):
        raise ValueError(f"carrier frequency must be positive, got {carrier_hz!r}")
    x = SPEED_OF_LIGHT / carrier_hz / (4.0 * math.pi * d)
    return x * x


def gain_from_distance(d: float, carrier_hz: float) -> complex:
    """Line-of-sight complex gain: Friis magnitude with propagation phase -2 pi d / lambda."""
    mag = math.sqrt(friis_power_gain(d, carrier_hz))
    phase = wrap_phase(-2.0 * math.pi * d * carrier_hz / SPEED_OF_LIGHT)
    return cmath.rect(mag, phase)


def build_collinear_scenario(cfg: GeometryConfig) -> Scenario:
    """Instantiate the Scenario for a collinear geometry.

    Noise power is normalized to 1; the source power is chosen so the passive
    SNR at the destination equals ``10^(snr_d_db/10)`` and the eavesdropper
    budget is ``pe_over_ps`` times that.
    """
    d_ed = max(abs(cfg.d_se - cfg.d_sd), cfg.min_distance_m)
    h_sd = gain_from_distance(cfg.d_sd, cfg.carrier_hz)
    h_se = gain_from_distance(cfg.d_se, cfg.carrier_hz)
    h_ed = gain_from_distance(d_ed, cfg.carrier_hz)
    p_s = 10.0 ** (cfg.snr_d_db / 10.0) / abs2(h_sd)
    return Scenario(h_sd=h_sd, h_se=h_se, h_ed=h_ed,
                    p_s=p_s, p_e=cfg.pe_over_ps * p_s, sigma2=1.0)
