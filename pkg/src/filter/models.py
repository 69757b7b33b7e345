from __future__ import annotations

import hashlib
import math
from enum import Enum

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from src.numerics.models import RealArray


class Provenance(BaseModel):
    """Where an observation sequence came from."""

    model_config = ConfigDict(frozen=True)

    system: str = 'unknown'
    observable: str = 'unknown'
    seed: int | None = None
    length: int = 0

    @property
    def digest(self) -> str:
        return hashlib.sha256(self.model_dump_json().encode()).hexdigest()[:16]


class TrajectoryBuffer(BaseModel):
    """Scalar observations y_0..y_m of one trajectory."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    values: RealArray
    provenance: Provenance = Provenance()

    @field_validator('values')
    @classmethod
    def _finite_nonempty(cls, values: np.ndarray) -> np.ndarray:
        if values.ndim != 1 or values.size == 0:
            raise ValueError('a trajectory buffer holds a nonempty 1-D sequence')
        if not np.all(np.isfinite(values)):
            raise ValueError('trajectory values must be finite')
        return values

    @classmethod
    def from_values(cls, values: object, **provenance: object) -> TrajectoryBuffer:
        array = np.asarray(values, dtype=float)
        return cls(values=array, provenance=Provenance(length=int(array.size), **provenance))

    def __len__(self) -> int:
        return int(self.values.size)

    def slice(self, start: int, stop: int | None = None) -> TrajectoryBuffer:
        values = self.values[start:stop]
        return TrajectoryBuffer(
            values=values,
            provenance=self.provenance.model_copy(update={'length': int(values.size)}),
        )


class FilterModel(BaseModel):
    """
    Least-squares linear filter of delay depth d.

    Prediction convention: y_{t+1} ~ sum_j c_j * y_{t-j}, i.e. c_j weights the observation
    j steps before the newest one. The forward-indexed vector of the finite-data objective
    is the reversal of this one (c~_i = c_{d-1-i}).
    """

    model_config = ConfigDict(frozen=True)

    d: int = Field(ge=1)
    coeffs: tuple[float, ...]
    degenerate_fit: bool = False
    objective: float | None = None
    final_residual: float | None = None
    row_start: int | None = None
    provenance_hash: str | None = None

    @model_validator(mode='after')
    def _check_coeffs(self) -> FilterModel:
        if len(self.coeffs) != self.d:
            raise ValueError(f'expected {self.d} coefficients, got {len(self.coeffs)}')
        if not all(math.isfinite(c) for c in self.coeffs):
            raise ValueError('filter coefficients must be finite')
        return self

    @property
    def c(self) -> np.ndarray:
        return np.asarray(self.coeffs, dtype=float)


class GramSource(str, Enum):
    EMPIRICAL_TIME_AVERAGE = 'empirical-time-average'
    SNIPPET_ENSEMBLE = 'snippet-ensemble'
    EXACT_ORACLE = 'exact-oracle'


class GramSummary(BaseModel):
    """Autocorrelations A(0..n_max), A(n) = <U^n f, f>, and the Toeplitz systems built from them."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    autocorr: RealArray
    source: GramSource
    sample_size: int = Field(ge=1)

    @field_validator('autocorr')
    @classmethod
    def _finite_nonempty(cls, values: np.ndarray) -> np.ndarray:
        if values.ndim != 1 or values.size == 0:
            raise ValueError('autocorrelations must be a nonempty 1-D sequence')
        if not np.all(np.isfinite(values)):
            raise ValueError('autocorrelations must be finite')
        return values

    @property
    def n_max(self) -> int:
        return int(self.autocorr.size) - 1

    @property
    def is_exact(self) -> bool:
        return self.source is GramSource.EXACT_ORACLE

    @property
    def slack(self) -> float:
        """Statistical tolerance 3 A(0) / sqrt(sample_size); zero for exact sources."""
        if self.is_exact:
            return 0.0
        return 3.0 * float(self.autocorr[0]) / math.sqrt(self.sample_size)
