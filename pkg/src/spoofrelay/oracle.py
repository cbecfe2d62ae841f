"""Independent ground truth for the closed forms.

Three checks that share no code path with the solver's case analysis: an
exhaustive (rho, |v|, phase) grid search of the leakage maximization, random
sampling of the achievable-SNR interval, and a symbol-level Monte-Carlo
estimate of the destination SNR built from the received-sample model.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import rates
from .channel import Scenario, abs2

LN2 = math.log(2.0)


@dataclass(frozen=True)
class OracleResult:
    """Best grid point of the exhaustive search plus a local accuracy radius."""

    leakage_bps_hz: float
    rho_hat: float
    v_hat: complex
    resolution_bound: float


def philox_generator(seed: int) -> np.random.Generator:
    """Counter-based generator; identical seeds give identical streams everywhere."""
    return np.random.Generator(np.random.Philox(seed))


def cn_samples(rng: np.random.Generator, n: int, variance: float) -> np.ndarray:
    """Circularly-symmetric complex Gaussian draws via the complex Box-Muller map."""
    u1 = 1.0 - rng.random(n)
    u2 = rng.random(n)
    return np.sqrt(-variance * np.log(u1)) * np.exp(2j * np.pi * u2)


def random_scenario(rng: np.random.Generator,
                    gain_range: tuple[float, float] = (1e-3, 10.0),
                    power_range: tuple[float, float] = (0.1, 1e3)) -> Scenario:
    """Log-uniform gain magnitudes and powers, uniform phases, unit noise power."""
    glo, ghi = math.log10(gain_range[0]), math.log10(gain_range[1])
    mags = 10.0 ** rng.uniform(glo, ghi, size=3)
    phases = rng.uniform(-np.pi, np.pi, size=3)
    gains = mags * np.exp(1j * phases)
    plo, phi = math.log10(power_range[0]), math.log10(power_range[1])
    powers = 10.0 ** rng.uniform(plo, phi, size=2)
    return Scenario(complex(gains[0]), complex(gains[1]), complex(gains[2]),
                    float(powers[0]), float(powers[1]), 1.0)


def _gamma_d_grid(s: Scenario, rho: float, mags: np.ndarray,
                  unit: np.ndarray) -> np.ndarray:
    """gamma_d over the |v| x phase grid at one rho (direct evaluation)."""
    k = math.sqrt(rho) * s.h_se * s.h_ed
    v = mags[:, None] * unit[None, :]
    z = s.h_sd + v * k
    num = (z.real * z.real + z.imag * z.imag) * s.ps_norm
    den = 1.0 + (mags * mags)[:, None] * abs2(s.h_ed)
    return num / den


def grid_oracle(s: Scenario, n_rho: int = 256, n_mag: int = 256,
                n_phase: int = 64) -> OracleResult:
    """Exhaustive search of the leakage maximization on a regular control grid.

    The |v| axis is renormalized per rho to the power cap so the full-power
    boundary is always on-grid; a point is feasible when gamma_d <= gamma_e.
    Ties are broken toward the lowest grid index. The resolution bound is a
    local Lipschitz-times-spacing estimate around the winning grid point.
    """
    if n_rho < 2 or n_mag < 2 or n_phase < 2:
        raise ValueError("grid sizes must all be at least 2")
    rhos = np.linspace(0.0, 1.0, n_rho)
    unit = np.exp(2j * np.pi * np.arange(n_phase) / n_phase)
    per_slice = np.full(n_rho, -np.inf)
    best = None  # (leakage, i, j, k, gamma, v)
    e2ps = abs2(s.h_se) * s.ps_norm
    for i in range(n_rho):
        rho = float(rhos[i])
        cap = rates.v_magnitude_cap(s, rho)
        mags = np.linspace(0.0, cap, n_mag)
        gd = _gamma_d_grid(s, rho, mags, unit)
        ge = (1.0 - rho) * e2ps
        feasible = gd <= ge
        if not feasible.any():
            continue
        masked = np.where(feasible, gd, -np.inf)
        flat = int(np.argmax(masked))
        gamma = float(masked.flat[flat])
        leak = math.log2(1.0 + gamma)
        per_slice[i] = leak
        if best is None or leak > best[0]:
            j, k = divmod(flat, n_phase)
            best = (leak, i, j, k, gamma, complex(mags[j] * unit[k]))
    if best is None:
        return OracleResult(0.0, 0.0, 0j, 0.0)
    leak, i, j, k, gamma, v_hat = best

    rho_gaps = [abs(float(per_slice[i2]) - leak)
                for i2 in (i - 1, i + 1)
                if 0 <= i2 < n_rho and np.isfinite(per_slice[i2])]
    bound_rho = max(rho_gaps) if rho_gaps else leak

    cap = rates.v_magnitude_cap(s, float(rhos[i]))
    mags = np.linspace(0.0, cap, n_mag)
    gd = _gamma_d_grid(s, float(rhos[i]), mags, unit)
    d_mag = max((abs(float(gd[j2, k]) - gamma)
                 for j2 in (j - 1, j + 1) if 0 <= j2 < n_mag), default=0.0)
    d_phase = max(abs(float(gd[j, (k - 1) % n_phase]) - gamma),
                  abs(float(gd[j, (k + 1) % n_phase]) - gamma))
    bound_v = (d_mag + d_phase) / ((1.0 + gamma) * LN2)
    return OracleResult(leak, float(rhos[i]), v_hat, bound_rho + bound_v)


def dump_grid_csv(s: Scenario, path: str, n_rho: int = 16, n_mag: int = 16,
                  n_phase: int = 8) -> None:
    """Write every grid point of the oracle search to CSV for debugging."""
    if n_rho < 2 or n_mag < 2 or n_phase < 2:
        raise ValueError("grid sizes must all be at least 2")
    rhos = np.linspace(0.0, 1.0, n_rho)
    unit = np.exp(2j * np.pi * np.arange(n_phase) / n_phase)
    e2ps = abs2(s.h_se) * s.ps_norm
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("rho,v_re,v_im,gamma_d,gamma_e,feasible\n")
        for rho in rhos:
            rho = float(rho)
            cap = rates.v_magnitude_cap(s, rho)
            mags = np.linspace(0.0, cap, n_mag)
            gd = _gamma_d_grid(s, rho, mags, unit)
            ge = (1.0 - rho) * e2ps
            for j in range(n_mag):
                for k in range(n_phase):
                    v = mags[j] * unit[k]
                    fh.write(f"{rho:.9g},{v.real:.9g},{v.imag:.9g},"
                             f"{float(gd[j, k]):.9g},{ge:.9g},"
                             f"{int(float(gd[j, k]) <= ge)}\n")


def envelope_samples(s: Scenario, rho: float, n_samples: int,
                     seed: int = 0) -> np.ndarray:
    """Destination SNR at ``n_samples`` random budget-feasible coefficients.

    Coefficients are uniform on the disk of radius the power cap. Every value
    must land inside [gamma_d_min, gamma_d_max] up to float tolerance; the
    tests assert that containment.
    """
    if not 0.0 <= rho <= 1.0:
        raise ValueError(f"rho must be in [0, 1], got {rho!r}")
    if n_samples < 1:
        raise ValueError(f"n_samples must be positive, got {n_samples!r}")
    rng = philox_generator(seed)
    cap = rates.v_magnitude_cap(s, rho)
    mags = cap * np.sqrt(rng.random(n_samples))
    v = mags * np.exp(2j * np.pi * rng.random(n_samples))
    z = s.h_sd + v * (math.sqrt(rho) * s.h_se * s.h_ed)
    num = (z.real * z.real + z.imag * z.imag) * s.ps_norm
    return num / (1.0 + mags * mags * abs2(s.h_ed))


def monte_carlo_snr_d(s: Scenario, control: rates.RelayControl,
                      n_symbols: int, seed: int = 0) -> float:
    """Symbol-level estimate of the destination SNR under a relay control.

    Draws CSCG unit-power symbols, relay processing noise and destination
    noise, then forms (signal-coefficient power x empirical symbol power) /
    empirical noise power. Agreement with ``effective_snr_d`` is statistical:
    the relative error concentrates within a few sqrt(2 / n_symbols).

    Parameters
    ----------
    n_symbols : int
        Sample count, at least 10_000.
    seed : int
        Philox seed; identical seeds reproduce the estimate bit for bit.
    """
    if n_symbols < 10_000:
        raise ValueError(f"n_symbols must be at least 10000, got {n_symbols!r}")
    rng = philox_generator(seed)
    symbols = cn_samples(rng, n_symbols, 1.0)
    relay_noise = cn_samples(rng, n_symbols, s.sigma2)
    dest_noise = cn_samples(rng, n_symbols, s.sigma2)
    coeff = (s.h_sd + control.v * math.sqrt(control.rho) * s.h_se * s.h_ed) \
        * math.sqrt(s.p_s)
    noise = control.v * s.h_ed * relay_noise + dest_noise
    signal_power = abs2(coeff) * float(np.mean(symbols.real ** 2 + symbols.imag ** 2))
    noise_power = float(np.mean(noise.real ** 2 + noise.imag ** 2))
    return signal_power / noise_power
