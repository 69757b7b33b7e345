from __future__ import annotations

import math
from enum import Enum
from typing import Annotated, Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class SystemKind(str, Enum):
    """Identifiers of the supported dynamical systems."""

    TORUS_ROTATION = 'torus-rotation'
    AFFINE_TWIST = 'affine-twist'
    ODOMETER = 'odometer'
    LORENZ63 = 'lorenz63'
    FINITE_PERMUTATION = 'finite-permutation'


class _System(BaseModel):
    model_config = ConfigDict(frozen=True, extra='forbid')

    @property
    def dim(self) -> int:
        raise NotImplementedError

    @property
    def label(self) -> str:
        """Compact identifier used in provenance records."""
        return self.model_dump_json()


class TorusRotation(_System):
    kind: Literal[SystemKind.TORUS_ROTATION] = SystemKind.TORUS_ROTATION
    alpha: tuple[float, ...] = (math.sqrt(2.0), math.sqrt(3.0))

    @field_validator('alpha')
    @classmethod
    def _nonempty(cls, value: tuple[float, ...]) -> tuple[float, ...]:
        if not value or not all(math.isfinite(a) for a in value):
            raise ValueError('alpha must be a nonempty finite vector')
        return value

    @property
    def dim(self) -> int:
        return len(self.alpha)


class AffineTwist(_System):
    kind: Literal[SystemKind.AFFINE_TWIST] = SystemKind.AFFINE_TWIST
    alpha: float = math.sqrt(2.0)

    @property
    def dim(self) -> int:
        return 2


class Odometer(_System):
    kind: Literal[SystemKind.ODOMETER] = SystemKind.ODOMETER

    @property
    def dim(self) -> int:
        return 1


class Lorenz63(_System):
    kind: Literal[SystemKind.LORENZ63] = SystemKind.LORENZ63
    sigma: float = 10.0
    rho: float = 28.0
    beta: float = 8.0 / 3.0
    flow_time: float = Field(0.05, gt=0)
    rk4_step: float = Field(5e-4, gt=0)

    @model_validator(mode='after')
    def _integer_substeps(self) -> Lorenz63:
        ratio = self.flow_time / self.rk4_step
        if abs(ratio - round(ratio)) * self.rk4_step > 1e-12 or round(ratio) < 1:
            raise ValueError(f'flow_time {self.flow_time} is not an integer multiple of rk4_step {self.rk4_step}')
        return self

    @property
    def dim(self) -> int:
        return 3

    @property
    def substeps(self) -> int:
        return round(self.flow_time / self.rk4_step)

    @property
    def delta(self) -> float:
        """Coordinate magnitude sqrt(beta (rho - 1)) of the nontrivial equilibria."""
        return math.sqrt(self.beta * (self.rho - 1.0))

    @property
    def equilibrium_plus(self) -> tuple[float, float, float]:
        return (self.delta, self.delta, self.rho - 1.0)


class FinitePermutation(_System):
    kind: Literal[SystemKind.FINITE_PERMUTATION] = SystemKind.FINITE_PERMUTATION
    perm: tuple[int, ...]

    @field_validator('perm')
    @classmethod
    def _bijection(cls, value: tuple[int, ...]) -> tuple[int, ...]:
        if not value or sorted(value) != list(range(len(value))):
            raise ValueError('perm must be a bijection on {0..N-1}')
        return value

    @property
    def dim(self) -> int:
        return 1

    @property
    def size(self) -> int:
        return len(self.perm)


SystemSpec = Annotated[
    TorusRotation | AffineTwist | Odometer | Lorenz63 | FinitePermutation,
    Field(discriminator='kind'),
]
