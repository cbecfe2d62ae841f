"""Shared fixtures: one canonical scenario per strategy class."""

from __future__ import annotations

import cmath
import math

import pytest

from spoofrelay import Scenario


def scenario_from_mags(d2: float, e2: float, f2: float, p_s: float, p_e: float,
                       sigma2: float = 1.0,
                       phases: tuple[float, float, float] = (0.0, 0.0, 0.0)) -> Scenario:
    """Build a Scenario from squared gain magnitudes and optional phases."""
    return Scenario(
        h_sd=cmath.rect(math.sqrt(d2), phases[0]),
        h_se=cmath.rect(math.sqrt(e2), phases[1]),
        h_ed=cmath.rect(math.sqrt(f2), phases[2]),
        p_s=p_s, p_e=p_e, sigma2=sigma2,
    )


@pytest.fixture
def make_scenario():
    return scenario_from_mags


@pytest.fixture
def case1():
    """Eavesdropper link stronger than the direct link: constructive forwarding."""
    return scenario_from_mags(1.0, 4.0, 1.0, 10.0, 10.0)


@pytest.fixture
def case1_no_relay_path():
    """Constructive class with h_ed = 0: the split ratio has a closed form."""
    return scenario_from_mags(1.0, 4.0, 0.0, 10.0, 10.0)


@pytest.fixture
def case2():
    """Middle band: pure jamming at rho = 0."""
    return scenario_from_mags(1.0, 0.5, 1.0, 10.0, 10.0)


@pytest.fixture
def case3_infeasible():
    """Weak eavesdropper link; no control makes the message decodable."""
    return scenario_from_mags(1.0, 0.05, 1.0, 10.0, 10.0)


@pytest.fixture
def case3_feasible():
    """Weak link but a huge jamming budget: destructive forwarding works."""
    return scenario_from_mags(1.0, 9e-5, 1.0, 100.0, 1e4)
