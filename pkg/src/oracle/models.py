from __future__ import annotations

import math
from enum import Enum

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from src.dynamics.models import FinitePermutation
from src.numerics.models import ComplexArray


class FiniteSystem(FinitePermutation):
    """Permutation of N atoms, each of mass 1/N."""

    @classmethod
    def cyclic_shift(cls, N: int, r: int = 1) -> FiniteSystem:
        """i -> i + r mod N."""
        return cls(perm=tuple((i + r) % N for i in range(N)))

    @classmethod
    def from_permutation(cls, sys: FinitePermutation) -> FiniteSystem:
        return cls(perm=sys.perm)

    @property
    def N(self) -> int:
        return self.size

    @property
    def measure(self) -> np.ndarray:
        return np.full(self.size, 1.0 / self.size)


class SpectralAtom(BaseModel):
    """Point mass of the trace measure at exp(2 pi i * frequency)."""

    model_config = ConfigDict(frozen=True)

    frequency: float = Field(ge=0.0, lt=1.0)
    weight: float = Field(ge=0.0)

    @property
    def eigenvalue(self) -> complex:
        return complex(np.exp(2j * math.pi * self.frequency))


class TraceMeasure(BaseModel):
    model_config = ConfigDict(frozen=True)

    atoms: tuple[SpectralAtom, ...]

    @property
    def eigenvalues(self) -> np.ndarray:
        return np.exp(2j * np.pi * np.array([atom.frequency for atom in self.atoms], dtype=float))

    @property
    def weights(self) -> np.ndarray:
        return np.array([atom.weight for atom in self.atoms], dtype=float)

    @property
    def total_mass(self) -> float:
        return float(self.weights.sum())

    def moment(self, n: int) -> complex:
        """Integral of lambda^n against the measure."""
        return complex(np.sum(self.weights * self.eigenvalues**n))


class VandermondeCertificate(BaseModel):
    """Coefficients (lowest degree first) of p with p(lambda_i) = 1 / lambda_i on the atoms."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    coefficients: ComplexArray
    residual: float


class SzegoVerdict(str, Enum):
    HOLDS = 'szego-holds'
    FAILS = 'szego-fails'
    INCONCLUSIVE = 'inconclusive'


class SzegoResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    value: float
    verdict: SzegoVerdict
