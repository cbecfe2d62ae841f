"""Reading and writing the JSON description files for scenarios, geometries and sweeps."""

from __future__ import annotations

import json
from typing import Union

from .channel import GeometryConfig, Scenario
from .sweep import SweepConfig

SCENARIO_FIELDS = ("h_sd_re", "h_sd_im", "h_se_re", "h_se_im",
                   "h_ed_re", "h_ed_im", "p_s", "p_e", "sigma2")
GEOMETRY_REQUIRED = ("d_sd", "d_se", "carrier_hz", "snr_d_db", "pe_over_ps")
GEOMETRY_OPTIONAL = ("min_distance_m",)
SWEEP_REQUIRED = ("d_sd", "carrier_hz", "snr_d_db", "pe_over_ps",
                  "d_se_start", "d_se_stop", "d_se_step")
SWEEP_OPTIONAL = ("min_distance_m", "out")


class InputFormatError(ValueError):
    """A description file cannot be parsed into the expected fields."""


def _load_json(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as e:
        raise InputFormatError(f"{path}: {e.strerror or e}") from e
    except json.JSONDecodeError as e:
        raise InputFormatError(
            f"{path}: line {e.lineno}, column {e.colno}: {e.msg}") from e
    if not isinstance(data, dict):
        raise InputFormatError(f"{path}: top level must be a JSON object")
    return data


def _numeric_fields(data: dict, required, optional, path: str, kind: str,
                    non_numeric_ok=()) -> dict:
    missing = sorted(set(required) - set(data))
    if missing:
        raise InputFormatError(
            f"{path}: {kind} is missing field(s): {', '.join(missing)}")
    unknown = sorted(set(data) - set(required) - set(optional))
    if unknown:
        raise InputFormatError(
            f"{path}: {kind} has unknown field(s): {', '.join(unknown)}")
    out = {}
    for key, value in data.items():
        if key in non_numeric_ok:
            out[key] = value
            continue
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise InputFormatError(
                f"{path}: field {key} must be a number, got {value!r}")
        out[key] = float(value)
    return out


def scenario_to_dict(s: Scenario) -> dict:
    return {
        "h_sd_re": s.h_sd.real, "h_sd_im": s.h_sd.imag,
        "h_se_re": s.h_se.real, "h_se_im": s.h_se.imag,
        "h_ed_re": s.h_ed.real, "h_ed_im": s.h_ed.imag,
        "p_s": s.p_s, "p_e": s.p_e, "sigma2": s.sigma2,
    }


def scenario_from_dict(data: dict, path: str = "<scenario>") -> Scenario:
    fields = _numeric_fields(data, SCENARIO_FIELDS, (), path, "scenario")
    return Scenario(
        h_sd=complex(fields["h_sd_re"], fields["h_sd_im"]),
        h_se=complex(fields["h_se_re"], fields["h_se_im"]),
        h_ed=complex(fields["h_ed_re"], fields["h_ed_im"]),
        p_s=fields["p_s"], p_e=fields["p_e"], sigma2=fields["sigma2"],
    )


def geometry_from_dict(data: dict, path: str = "<geometry>") -> GeometryConfig:
    fields = _numeric_fields(data, GEOMETRY_REQUIRED, GEOMETRY_OPTIONAL,
                             path, "geometry")
    return GeometryConfig(**fields)


def sweep_config_from_dict(data: dict, path: str = "<sweep>") -> SweepConfig:
    fields = _numeric_fields(data, SWEEP_REQUIRED, SWEEP_OPTIONAL, path,
                             "sweep config", non_numeric_ok=("out",))
    out = fields.pop("out", None)
    if out is not None and not isinstance(out, str):
        raise InputFormatError(f"{path}: field out must be a string path")
    return SweepConfig(out=out, **fields)


def load_input_file(path: str) -> Union[Scenario, GeometryConfig]:
    """Read a solve input: gains directly, or a geometry to build them from."""
    data = _load_json(path)
    if "h_sd_re" in data:
        return scenario_from_dict(data, path)
    if "d_sd" in data:
        return geometry_from_dict(data, path)
    raise InputFormatError(
        f"{path}: expected scenario fields ({', '.join(SCENARIO_FIELDS)}) "
        f"or geometry fields ({', '.join(GEOMETRY_REQUIRED)})")


def load_sweep_config(path: str) -> SweepConfig:
    return sweep_config_from_dict(_load_json(path), path)
