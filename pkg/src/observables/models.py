from __future__ import annotations

from enum import Enum
from typing import Annotated, Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator


class ObservableKind(str, Enum):
    TORUS_EXP_TRIG = 'torus-exp-trig'
    BOX_INDICATOR = 'box-indicator'
    COORDINATE = 'coordinate'
    GAUSSIAN_BUMP = 'gaussian-bump'
    INTERVAL_EXP_SIN = 'interval-exp-sin'
    ATOM_VECTOR = 'atom-vector'


class _Observable(BaseModel):
    model_config = ConfigDict(frozen=True, extra='forbid')

    @property
    def label(self) -> str:
        return self.model_dump_json()


class TorusExpTrig(_Observable):
    """exp(a sin(2 pi k1 x1) + b cos(2 pi k2 x2))."""

    kind: Literal[ObservableKind.TORUS_EXP_TRIG] = ObservableKind.TORUS_EXP_TRIG
    a: float
    k1: int
    b: float
    k2: int


class BoxIndicator(_Observable):
    """1 on the half-open box lo <= x < hi, else 0."""

    kind: Literal[ObservableKind.BOX_INDICATOR] = ObservableKind.BOX_INDICATOR
    lo: tuple[float, ...]
    hi: tuple[float, ...]

    @model_validator(mode='after')
    def _ordered(self) -> BoxIndicator:
        if len(self.lo) != len(self.hi) or not self.lo:
            raise ValueError('lo and hi must be nonempty and of equal length')
        if any(low >= high for low, high in zip(self.lo, self.hi, strict=True)):
            raise ValueError('box requires lo < hi componentwise')
        return self


class Coordinate(_Observable):
    kind: Literal[ObservableKind.COORDINATE] = ObservableKind.COORDINATE
    index: int = Field(ge=0)


class GaussianBump(_Observable):
    """exp(-||x - center||^2 / width^2)."""

    kind: Literal[ObservableKind.GAUSSIAN_BUMP] = ObservableKind.GAUSSIAN_BUMP
    center: tuple[float, ...]
    width: float = Field(gt=0)


class IntervalExpSin(_Observable):
    """exp(sin(2 pi k x)) on the unit interval."""

    kind: Literal[ObservableKind.INTERVAL_EXP_SIN] = ObservableKind.INTERVAL_EXP_SIN
    k: int


class AtomVector(_Observable):
    """Function on the atoms of a finite system, given by its values."""

    kind: Literal[ObservableKind.ATOM_VECTOR] = ObservableKind.ATOM_VECTOR
    values: tuple[float, ...] = Field(min_length=1)


ObservableSpec = Annotated[
    TorusExpTrig | BoxIndicator | Coordinate | GaussianBump | IntervalExpSin | AtomVector,
    Field(discriminator='kind'),
]
