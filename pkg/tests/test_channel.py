"""Free-space gains, phase wrapping and collinear scenario construction."""

import cmath
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from spoofrelay import (GeometryConfig, Scenario, abs2,
                        build_collinear_scenario, friis_power_gain,
                        gain_from_distance, wrap_phase)

CARRIER_HZ = 1.8e9


def test_abs2_is_the_squared_magnitude():
    assert abs2(3.0 + 4.0j) == pytest.approx(25.0)
    assert abs2(0.0j) == 0.0
    assert abs2(-2.0 + 0.0j) == pytest.approx(4.0)


@given(st.floats(-1e4, 1e4))
def test_wrap_phase_lands_in_half_open_interval(phi):
    w = wrap_phase(phi)
    assert -math.pi < w <= math.pi
    assert cmath.exp(1j * w) == pytest.approx(cmath.exp(1j * phi), abs=1e-9)


def test_wrap_phase_boundary_goes_to_plus_pi():
    assert wrap_phase(math.pi) == math.pi
    assert wrap_phase(-math.pi) == math.pi
    assert wrap_phase(3.0 * math.pi) == math.pi
    assert wrap_phase(0.0) == 0.0


def test_friis_reference_value():
    assert friis_power_gain(1000.0, CARRIER_HZ) == pytest.approx(
        1.7566153262788426e-10, rel=1e-12)


def test_friis_inverse_square_in_distance():
    g1 = friis_power_gain(500.0, CARRIER_HZ)
    g2 = friis_power_gain(1000.0, CARRIER_HZ)
    assert g1 == pytest.approx(4.0 * g2, rel=1e-12)


@given(st.floats(1.0, 1e5), st.floats(1e8, 1e11))
def test_friis_decreases_in_distance_and_carrier(d, f):
    assert friis_power_gain(d * 1.5, f) < friis_power_gain(d, f)
    assert friis_power_gain(d, f * 1.5) < friis_power_gain(d, f)


@pytest.mark.parametrize("d", [0.0, -3.0, math.inf, math.nan])
def test_friis_rejects_bad_distance(d):
    with pytest.raises(ValueError):
        friis_power_gain(d, CARRIER_HZ)


def test_friis_rejects_bad_carrier():
    with pytest.raises(ValueError):
        friis_power_gain(100.0, 0.0)


@given(st.floats(1.0, 1e5))
def test_gain_magnitude_squares_to_friis(d):
    g = gain_from_distance(d, CARRIER_HZ)
    assert abs2(g) == pytest.approx(friis_power_gain(d, CARRIER_HZ), rel=1e-12)


def test_gain_carries_the_propagation_phase():
    d = 777.0
    g = gain_from_distance(d, CARRIER_HZ)
    expected = wrap_phase(-2.0 * math.pi * d * CARRIER_HZ / 299_792_458.0)
    assert cmath.phase(g) == pytest.approx(expected, abs=1e-12)


def test_scenario_rejects_bad_powers_and_gains():
    with pytest.raises(ValueError):
        Scenario(1.0 + 0j, 1.0 + 0j, 1.0 + 0j, p_s=0.0, p_e=1.0)
    with pytest.raises(ValueError):
        Scenario(1.0 + 0j, 1.0 + 0j, 1.0 + 0j, p_s=1.0, p_e=-1.0)
    with pytest.raises(ValueError):
        Scenario(1.0 + 0j, 1.0 + 0j, 1.0 + 0j, p_s=1.0, p_e=1.0, sigma2=0.0)
    with pytest.raises(ValueError):
        Scenario(complex(math.nan, 0.0), 1.0 + 0j, 1.0 + 0j, p_s=1.0, p_e=1.0)


def test_scenario_normalized_powers():
    s = Scenario(1.0 + 0j, 1.0 + 0j, 1.0 + 0j, p_s=6.0, p_e=9.0, sigma2=3.0)
    assert s.ps_norm == pytest.approx(2.0)
    assert s.pe_norm == pytest.approx(3.0)


def test_geometry_config_validation():
    with pytest.raises(ValueError):
        GeometryConfig(d_sd=0.0, d_se=100.0, carrier_hz=CARRIER_HZ, snr_d_db=10.0)
    with pytest.raises(ValueError):
        GeometryConfig(d_sd=1000.0, d_se=-5.0, carrier_hz=CARRIER_HZ, snr_d_db=10.0)
    with pytest.raises(ValueError):
        GeometryConfig(d_sd=1000.0, d_se=100.0, carrier_hz=CARRIER_HZ,
                       snr_d_db=10.0, pe_over_ps=-0.1)


def _stock_geometry(d_se: float, **kwargs) -> GeometryConfig:
    return GeometryConfig(d_sd=1000.0, d_se=d_se, carrier_hz=CARRIER_HZ,
                          snr_d_db=10.0, **kwargs)


def test_source_power_hits_the_target_receive_snr_exactly():
    s = build_collinear_scenario(_stock_geometry(500.0))
    assert s.ps_norm * abs2(s.h_sd) == pytest.approx(10.0, rel=1e-15)
    assert s.sigma2 == 1.0
    assert s.p_e == pytest.approx(s.p_s, rel=1e-15)


def test_half_distance_gives_four_times_the_gain():
    s = build_collinear_scenario(_stock_geometry(500.0))
    assert abs2(s.h_se) == pytest.approx(4.0 * abs2(s.h_sd), rel=1e-12)


def test_colocated_eavesdropper_clamps_to_min_distance():
    s = build_collinear_scenario(_stock_geometry(1000.0))
    assert abs2(s.h_ed) == pytest.approx(friis_power_gain(1.0, CARRIER_HZ),
                                         rel=1e-12)
    s2 = build_collinear_scenario(_stock_geometry(999.5, min_distance_m=2.0))
    assert abs2(s2.h_ed) == pytest.approx(friis_power_gain(2.0, CARRIER_HZ),
                                          rel=1e-12)


def test_eavesdropper_power_scaling():
    s = build_collinear_scenario(_stock_geometry(500.0, pe_over_ps=0.25))
    assert s.p_e == pytest.approx(0.25 * s.p_s, rel=1e-15)


@pytest.mark.parametrize("d_se", [50.0, 500.0, 1000.0, 2000.0, 3000.0])
def test_generated_scenarios_are_finite(d_se):
    s = build_collinear_scenario(_stock_geometry(d_se))
    for z in (s.h_sd, s.h_se, s.h_ed):
        assert math.isfinite(z.real) and math.isfinite(z.imag)
    assert math.isfinite(s.p_s) and s.p_s > 0.0
    assert math.isfinite(s.p_e) and s.p_e > 0.0
