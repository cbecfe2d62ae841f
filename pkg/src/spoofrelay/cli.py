"""Command-line front end: solve one scenario, run the sweep, run the checks.

Each subcommand builds the same request models the HTTP service accepts and
either calls the handlers in-process (default) or posts them to a running
server (``--server``). Exit codes: 0 success, 1 failed checks or server
errors, 2 malformed inputs or usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import httpx

from .channel import GeometryConfig
from .scenario_io import InputFormatError, load_input_file, load_sweep_config
from .service.app import handle_solve, handle_sweep, handle_verify
from .service.models import (GeometryModel, ScenarioModel, SolveRequest,
                             SolveResponse, SweepRequest, SweepResponse,
                             VerifyRequest, VerifyResponse)
from .sweep import CSV_HEADER, format_csv_row

_POST_TIMEOUT_S = 600.0


class ServerError(RuntimeError):
    """The remote service rejected a request or returned a non-200 status."""


def _post(server: str, path: str, request, response_cls):
    url = server.rstrip("/") + path
    response = httpx.post(url, json=request.model_dump(mode="json"),
                          timeout=_POST_TIMEOUT_S)
    if response.status_code != 200:
        raise ServerError(f"{url} returned {response.status_code}: "
                          f"{response.text}")
    return response_cls.model_validate(response.json())


def _print_kv_block(data: dict) -> None:
    width = max(len(k) for k in data)
    for key, value in data.items():
        shown = f"{value:.12g}" if isinstance(value, float) else str(value)
        print(f"{key:<{width}}  {shown}")


def cmd_solve(args: argparse.Namespace) -> int:
    loaded = load_input_file(args.scenario)
    if isinstance(loaded, GeometryConfig):
        request = SolveRequest(geometry=GeometryModel(
            d_sd=loaded.d_sd, d_se=loaded.d_se, carrier_hz=loaded.carrier_hz,
            snr_d_db=loaded.snr_d_db, pe_over_ps=loaded.pe_over_ps,
            min_distance_m=loaded.min_distance_m))
    else:
        request = SolveRequest(scenario=ScenarioModel.from_scenario(loaded))
    if args.server:
        response = _post(args.server, "/solve", request, SolveResponse)
    else:
        response = handle_solve(request)
    _print_kv_block(response.model_dump())
    print(response.model_dump_json())
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(response.model_dump_json(indent=2) + "\n")
    return 0


def cmd_sweep(args: argparse.Namespace) -> int:
    cfg = load_sweep_config(args.config)
    out = args.out or cfg.out
    if out is None:
        print("error: no output path; pass --out or set \"out\" in the config",
              file=sys.stderr)
        return 2
    request = SweepRequest(
        d_sd=cfg.d_sd, carrier_hz=cfg.carrier_hz, snr_d_db=cfg.snr_d_db,
        pe_over_ps=cfg.pe_over_ps, min_distance_m=cfg.min_distance_m,
        d_se_start=cfg.d_se_start, d_se_stop=cfg.d_se_stop,
        d_se_step=cfg.d_se_step)
    if args.server:
        response = _post(args.server, "/sweep", request, SweepResponse)
    else:
        response = handle_sweep(request)
    with open(out, "w", encoding="utf-8") as fh:
        fh.write(CSV_HEADER + "\n")
        for r in response.records:
            fh.write(format_csv_row(r.d_se_m, r.passive_bps_hz,
                                    r.active_bps_hz, r.strategy, r.rho_star,
                                    r.v_mag, r.jam_power) + "\n")
    print(f"wrote {len(response.records)} rows to {out}")
    for region in response.regions:
        print(f"  {region.strategy:<21} d_se {region.d_se_first_m:g} m "
              f"to {region.d_se_last_m:g} m")
    print(f"peak active leakage {response.max_active_bps_hz:.9g} bps/Hz "
          f"at d_se {response.max_active_d_se_m:g} m")
    return 0


def _parse_grid(text: str) -> tuple[int, int, int]:
    parts = text.split(",")
    if len(parts) != 3:
        raise InputFormatError(
            f"--grid expects n_rho,n_mag,n_phase, got {text!r}")
    try:
        n_rho, n_mag, n_phase = (int(p) for p in parts)
    except ValueError as e:
        raise InputFormatError(
            f"--grid expects three integers, got {text!r}") from e
    return n_rho, n_mag, n_phase


def cmd_verify(args: argparse.Namespace) -> int:
    n_rho, n_mag, n_phase = _parse_grid(args.grid)
    request = VerifyRequest(
        seed=args.seed, scenarios=args.scenarios,
        n_rho=n_rho, n_mag=n_mag, n_phase=n_phase,
        envelope_controls=args.envelope_controls,
        envelope_rho_count=args.envelope_rho_count,
        mc_pairs=args.mc_pairs, mc_symbols=args.mc_symbols)
    if args.server:
        response = _post(args.server, "/verify", request, VerifyResponse)
    else:
        response = handle_verify(request)
    for check in response.checks:
        verdict = "PASS" if check.passed else "FAIL"
        summary = " ".join(f"{k}={v:.6g}" if isinstance(v, float)
                           else f"{k}={v}" for k, v in check.detail.items())
        print(f"[{verdict}] {check.name}: {summary}")
        if check.counterexample is not None:
            path = os.path.join(args.out_dir,
                                f"counterexample_{check.name}.json")
            with open(path, "w", encoding="utf-8") as fh:
                json.dump(check.counterexample, fh, indent=2)
                fh.write("\n")
            print(f"       offending scenario written to {path}")
            print(f"       {json.dumps(check.counterexample)}")
    return 0 if response.passed else 1


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service.app import app
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spoofrelay",
        description="Information leakage under an active spoofing-relay "
                    "eavesdropper: exact solver, distance sweep, and "
                    "brute-force verification suites.")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p_solve = sub.add_parser(
        "solve", help="solve one scenario (gains file or geometry file)")
    p_solve.add_argument("--scenario", required=True,
                         help="JSON file with channel gains or a geometry")
    p_solve.add_argument("--out", help="write the solution JSON here")
    p_solve.add_argument("--server", help="POST to a running service instead")
    p_solve.set_defaults(func=cmd_solve)

    p_sweep = sub.add_parser(
        "sweep", help="sweep eavesdropper distance and write the CSV")
    p_sweep.add_argument("--config", required=True,
                         help="JSON sweep configuration file")
    p_sweep.add_argument("--out",
                         help="CSV output path (overrides the config's out)")
    p_sweep.add_argument("--server", help="POST to a running service instead")
    p_sweep.set_defaults(func=cmd_sweep)

    p_verify = sub.add_parser(
        "verify", help="run the randomized closed-form/oracle check suites")
    p_verify.add_argument("--seed", type=int, default=42)
    p_verify.add_argument("--scenarios", type=int, default=100)
    p_verify.add_argument("--grid", default="256,256,64",
                          help="oracle grid as n_rho,n_mag,n_phase")
    p_verify.add_argument("--envelope-controls", type=int, default=10_000)
    p_verify.add_argument("--envelope-rho-count", type=int, default=8)
    p_verify.add_argument("--mc-pairs", type=int, default=5)
    p_verify.add_argument("--mc-symbols", type=int, default=100_000)
    p_verify.add_argument("--out-dir", default=".",
                          help="where to persist counterexample scenarios")
    p_verify.add_argument("--server", help="POST to a running service instead")
    p_verify.set_defaults(func=cmd_verify)

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except InputFormatError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ServerError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except httpx.HTTPError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
