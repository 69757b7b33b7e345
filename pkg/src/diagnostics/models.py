from __future__ import annotations

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from src.numerics.models import ComplexArray, RealArray


class AutocorrReport(BaseModel):
    """True and filter autocorrelations on lags 0..n_max from a common snippet ensemble."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    a_true: RealArray
    a_filter: RealArray
    d: int
    N: int

    @model_validator(mode='after')
    def _check(self) -> AutocorrReport:
        if self.a_true.shape != self.a_filter.shape:
            raise ValueError('a_true and a_filter must have equal length')
        if not (np.all(np.isfinite(self.a_true)) and np.all(np.isfinite(self.a_filter))):
            raise ValueError('autocorrelations must be finite')
        return self

    @property
    def lags(self) -> np.ndarray:
        return np.arange(self.a_true.size)

    @property
    def n_max(self) -> int:
        return int(self.a_true.size) - 1


class ErrorCurve(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    depths: tuple[int, ...]
    mse: RealArray
    steps: int
    objectives: RealArray | None = None
    degenerate: tuple[bool, ...] = ()

    @model_validator(mode='after')
    def _check(self) -> ErrorCurve:
        if len(self.depths) != self.mse.size:
            raise ValueError('depths and mse must have equal length')
        if np.any(self.mse < 0):
            raise ValueError('mean squared errors are nonnegative')
        return self

    @classmethod
    def concat(cls, curves: list[ErrorCurve]) -> ErrorCurve:
        """Join curves computed on disjoint depth chunks with the same horizon."""
        if not curves or len({curve.steps for curve in curves}) != 1:
            raise ValueError('curves must be nonempty and share the prediction horizon')
        objectives = [curve.objectives for curve in curves]
        extra = {} if any(o is None for o in objectives) else {'objectives': np.concatenate(objectives)}
        return cls(
            depths=tuple(d for curve in curves for d in curve.depths),
            mse=np.concatenate([curve.mse for curve in curves]),
            steps=curves[0].steps,
            degenerate=tuple(flag for curve in curves for flag in curve.degenerate),
            **extra,
        )


class PseudospectrumReport(BaseModel):
    """Exact eigenpair residuals ||U phi - lambda phi|| of U_d against the bound epsilon."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    d: int
    epsilon: float
    eigenvalues: ComplexArray
    residuals: RealArray
    tolerance: float

    @property
    def passed(self) -> np.ndarray:
        return self.residuals <= self.epsilon + self.tolerance

    @property
    def holds(self) -> bool:
        return bool(np.all(self.passed))

    @property
    def worst_defect(self) -> float:
        """min over eigenpairs of epsilon - residual; negative means a violation."""
        return float(np.min(self.epsilon - self.residuals))


class BoundCheck(BaseModel):
    """Per-lag comparison of |A(n) - A_d(n)| with the three-branch autocorrelation bound."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    differences: RealArray
    bounds: RealArray
    tolerance: float

    @property
    def passed(self) -> np.ndarray:
        return self.differences <= self.bounds + self.tolerance


class StabilityProbe(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    lengths: tuple[int, ...]
    distances: RealArray
    degenerate: bool
