"""HTTP service: the solver, the sweep and the verification suites as endpoints.

The handlers are plain functions over the pydantic models so the CLI can call
them in-process; the FastAPI app is a thin routing layer on top.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..channel import build_collinear_scenario
from ..optimizer import solve_attack
from ..sweep import run_sweep, strategy_regions
from ..verify import run_verification
from .models import (GeometryModel, RegionModel, ScenarioModel, SolveRequest,
                     SolveResponse, SweepRecordModel, SweepRequest,
                     SweepResponse, VerifyCheckModel, VerifyRequest,
                     VerifyResponse)


def handle_solve(req: SolveRequest) -> SolveResponse:
    if req.scenario is not None:
        s = req.scenario.to_scenario()
    else:
        s = build_collinear_scenario(req.geometry.to_geometry())
    return SolveResponse.from_solution(s, solve_attack(s))


def handle_sweep(req: SweepRequest) -> SweepResponse:
    records = run_sweep(req.to_config())
    regions = [RegionModel(strategy=strategy.value, d_se_first_m=first,
                           d_se_last_m=last)
               for strategy, first, last in strategy_regions(records)]
    best = max(records, key=lambda r: r.active_leakage)
    return SweepResponse(
        records=[SweepRecordModel.from_record(r) for r in records],
        regions=regions,
        max_active_bps_hz=best.active_leakage,
        max_active_d_se_m=best.d_se,
    )


def handle_verify(req: VerifyRequest) -> VerifyResponse:
    checks = run_verification(
        seed=req.seed, n_scenarios=req.scenarios,
        n_rho=req.n_rho, n_mag=req.n_mag, n_phase=req.n_phase,
        envelope_controls=req.envelope_controls,
        envelope_rho_count=req.envelope_rho_count,
        mc_pairs=req.mc_pairs, mc_symbols=req.mc_symbols,
    )
    return VerifyResponse(
        passed=all(c.passed for c in checks),
        checks=[VerifyCheckModel.from_check(c) for c in checks],
    )


def create_app() -> FastAPI:
    app = FastAPI(title="spoofrelay", version=__version__)

    @app.exception_handler(ValueError)
    async def _domain_error(request: Request, exc: ValueError) -> JSONResponse:
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok", "version": __version__}

    @app.post("/solve")
    def solve(req: SolveRequest) -> SolveResponse:
        return handle_solve(req)

    @app.post("/sweep")
    def sweep(req: SweepRequest) -> SweepResponse:
        return handle_sweep(req)

    @app.post("/verify")
    def verify(req: VerifyRequest) -> VerifyResponse:
        return handle_verify(req)

    return app


app = create_app()

__all__ = ["app", "create_app", "handle_solve", "handle_sweep",
           "handle_verify", "GeometryModel", "ScenarioModel"]
