from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field

from src.diagnostics import AutocorrReport, ErrorCurve
from src.filter import FilterModel
from src.numerics import ComplexSpectrum


class RunSettings(BaseModel):
    """Fully resolved parameters of one experiment run: registered defaults overlaid by the config."""

    model_config = ConfigDict(frozen=True, extra='forbid')

    m: int = Field(10_000, gt=0)
    N: int = Field(10_000, gt=0)
    depths: tuple[int, ...] = tuple(range(1, 41))
    d_autocorr: int = Field(21, gt=0)
    n_max: int = Field(63, gt=0)
    seed: int = 0

    flow_time: float = Field(0.05, gt=0)
    flow_times: tuple[float, ...] = ()
    horizon: float | None = None
    rk4_step: float = Field(5e-4, gt=0)
    observable_params: dict[str, float] = {}
    spectrum_depths: tuple[int, ...] = ()


class ErgodicResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    curve: ErrorCurve
    autocorr: AutocorrReport
    autocorr_model: FilterModel
    spectra: dict[int, ComplexSpectrum] = {}


class FlowTimeCurve(BaseModel):
    """Multistep error curve at one flow time; steps * flow_time is the prediction horizon."""

    model_config = ConfigDict(frozen=True)

    flow_time: float
    curve: ErrorCurve


class LorenzResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    curves: tuple[FlowTimeCurve, ...]
    autocorr: AutocorrReport
    autocorr_model: FilterModel
