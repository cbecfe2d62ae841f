"""Information leakage under an active spoofing-relay eavesdropper.

The eavesdropper re-forwards an amplified copy of the source's signal while
decoding the remainder, steering the legitimate link's adaptive rate. This
package computes the exact optimal attack (split ratio, complex relay gain,
resulting leakage rate), brute-force oracles to check the closed forms
against, a distance-sweep experiment, and an HTTP/CLI front end.
"""

from .channel import (SPEED_OF_LIGHT, GeometryConfig, Scenario, abs2,
                      build_collinear_scenario, friis_power_gain,
                      gain_from_distance, wrap_phase)
from .optimizer import (AttackSolution, Strategy, case3_quartic_roots,
                        classify_case, solve_attack, solve_case1, solve_case2,
                        solve_case3)
from .oracle import (OracleResult, cn_samples, dump_grid_csv, envelope_samples,
                     grid_oracle, monte_carlo_snr_d, philox_generator,
                     random_scenario)
from .rates import (Envelope, PowerBudgetError, RelayControl, eavesdropper_snr,
                    effective_snr_d, gamma_d_max, gamma_d_min, passive_leakage,
                    passive_rate_d, passive_rate_e, relay_power_used, rho1,
                    rho2, snr_d_max, snr_d_min, v_magnitude_cap)
from .scenario_io import (InputFormatError, geometry_from_dict,
                          load_input_file, load_sweep_config,
                          scenario_from_dict, scenario_to_dict,
                          sweep_config_from_dict)
from .sweep import (CSV_HEADER, SweepConfig, SweepRecord, format_csv_row,
                    run_sweep, strategy_regions, write_csv)
from .verify import (VerifyCheck, check_envelope_containment,
                     check_monte_carlo, check_oracle_agreement,
                     run_verification)

__version__ = "0.1.0"

__all__ = [
    "SPEED_OF_LIGHT", "GeometryConfig", "Scenario", "abs2",
    "build_collinear_scenario", "friis_power_gain", "gain_from_distance",
    "wrap_phase",
    "AttackSolution", "Strategy", "case3_quartic_roots", "classify_case",
    "solve_attack", "solve_case1", "solve_case2", "solve_case3",
    "OracleResult", "cn_samples", "dump_grid_csv", "envelope_samples",
    "grid_oracle", "monte_carlo_snr_d", "philox_generator", "random_scenario",
    "Envelope", "PowerBudgetError", "RelayControl", "eavesdropper_snr",
    "effective_snr_d", "gamma_d_max", "gamma_d_min", "passive_leakage",
    "passive_rate_d", "passive_rate_e", "relay_power_used", "rho1", "rho2",
    "snr_d_max", "snr_d_min", "v_magnitude_cap",
    "InputFormatError", "geometry_from_dict", "load_input_file",
    "load_sweep_config", "scenario_from_dict", "scenario_to_dict",
    "sweep_config_from_dict",
    "CSV_HEADER", "SweepConfig", "SweepRecord", "format_csv_row", "run_sweep",
    "strategy_regions", "write_csv",
    "VerifyCheck", "check_envelope_containment", "check_monte_carlo",
    "check_oracle_agreement", "run_verification",
    "__version__",
]
