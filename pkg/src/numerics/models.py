from __future__ import annotations

from typing import Annotated

import numpy as np
from pydantic import BaseModel, ConfigDict, PlainSerializer, PlainValidator, model_validator


def _as_real_array(value: object) -> np.ndarray:
    array = np.array(value, dtype=float)
    array.setflags(write=False)
    return array


def _as_complex_array(value: object) -> np.ndarray:
    array = np.array(value, dtype=complex)
    array.setflags(write=False)
    return array


def _complex_to_pairs(array: np.ndarray) -> list[list[float]]:
    return [[float(z.real), float(z.imag)] for z in np.ravel(array)]


RealArray = Annotated[
    np.ndarray,
    PlainValidator(_as_real_array),
    PlainSerializer(lambda array: array.tolist(), return_type=list),
]
ComplexArray = Annotated[
    np.ndarray,
    PlainValidator(_as_complex_array),
    PlainSerializer(_complex_to_pairs, return_type=list),
]


class ComplexSpectrum(BaseModel):
    """Roots of a characteristic polynomial with their relative residuals."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    values: ComplexArray
    residuals: RealArray
    eigenvectors: ComplexArray | None = None

    @model_validator(mode='after')
    def _check_lengths(self) -> ComplexSpectrum:
        if self.values.shape != self.residuals.shape:
            raise ValueError('values and residuals must have equal length')
        if not np.all(np.isfinite(self.residuals)):
            raise ValueError('residuals must be finite')
        return self

    @property
    def max_modulus(self) -> float:
        return float(np.max(np.abs(self.values))) if self.values.size else 0.0

    @property
    def max_residual(self) -> float:
        return float(np.max(self.residuals)) if self.residuals.size else 0.0


class LeastSquaresResult(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    x: RealArray
    degenerate: bool = False
    ridge: float = 0.0
    rank: int
    residual_norm: float


class SpdSolveResult(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    x: RealArray
    degenerate: bool = False
    jitter: float = 0.0
