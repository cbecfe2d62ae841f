"""HTTP layer: pydantic schemas and the FastAPI app over the core package."""

from .app import app, create_app, handle_solve, handle_sweep, handle_verify
from .models import (GeometryModel, RegionModel, ScenarioModel, SolveRequest,
                     SolveResponse, SweepRecordModel, SweepRequest,
                     SweepResponse, VerifyCheckModel, VerifyRequest,
                     VerifyResponse)

__all__ = [
    "app", "create_app", "handle_solve", "handle_sweep", "handle_verify",
    "GeometryModel", "RegionModel", "ScenarioModel", "SolveRequest",
    "SolveResponse", "SweepRecordModel", "SweepRequest", "SweepResponse",
    "VerifyCheckModel", "VerifyRequest", "VerifyResponse",
]
