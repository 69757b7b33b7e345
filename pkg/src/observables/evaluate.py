import numpy as np
from numpy.typing import ArrayLike

from src.core.exceptions import InvalidInputError
from src.dynamics.models import FinitePermutation, SystemSpec
from src.filter.models import Provenance, TrajectoryBuffer
from src.observables.models import (
    AtomVector,
    BoxIndicator,
    Coordinate,
    GaussianBump,
    IntervalExpSin,
    ObservableSpec,
    TorusExpTrig,
)


def _coordinates(x: ArrayLike, dim: int, obs: ObservableSpec) -> np.ndarray:
    state = np.asarray(x, dtype=float)
    if state.ndim == 0 or state.shape[-1] != dim:
        raise InvalidInputError(f'{obs.kind.value} expects {dim}-dimensional states, got shape {state.shape}')
    return state


def evaluate(obs: ObservableSpec, x: ArrayLike) -> np.ndarray | float:
    """f(x) for one state or a batch of states (coordinates on the last axis)."""
    match obs:
        case TorusExpTrig(a=a, k1=k1, b=b, k2=k2):
            state = _coordinates(x, 2, obs)
            values = np.exp(a * np.sin(2 * np.pi * k1 * state[..., 0]) + b * np.cos(2 * np.pi * k2 * state[..., 1]))
        case BoxIndicator(lo=lo, hi=hi):
            state = _coordinates(x, len(lo), obs)
            inside = np.all((state >= np.asarray(lo)) & (state < np.asarray(hi)), axis=-1)
            values = inside.astype(float)
        case Coordinate(index=index):
            state = np.asarray(x, dtype=float)
            if state.ndim == 0 or index >= state.shape[-1]:
                raise InvalidInputError(f'coordinate {index} does not exist for states of shape {state.shape}')
            values = state[..., index]
        case GaussianBump(center=center, width=width):
            state = _coordinates(x, len(center), obs)
            values = np.exp(-np.sum((state - np.asarray(center)) ** 2, axis=-1) / width**2)
        case IntervalExpSin(k=k):
            state = _coordinates(x, 1, obs)
            values = np.exp(np.sin(2 * np.pi * k * state[..., 0]))
        case AtomVector(values=table):
            atoms = np.asarray(x)
            if not np.issubdtype(atoms.dtype, np.integer) or np.any((atoms < 0) | (atoms >= len(table))):
                raise InvalidInputError(f'atom vector of length {len(table)} evaluated at invalid atoms')
            values = np.asarray(table, dtype=float)[atoms]
        case _:
            raise InvalidInputError(f'unsupported observable {obs!r}')

    if np.ndim(values) == 0:
        return float(values)
    return values


def observe(
    obs: ObservableSpec,
    traj: ArrayLike,
    system: SystemSpec | None = None,
    seed: int | None = None,
) -> TrajectoryBuffer:
    """Evaluate the observable along a trajectory, keeping order and provenance."""
    states = np.asarray(traj)
    if states.size == 0 or states.ndim == 0:
        raise InvalidInputError('cannot observe an empty trajectory')
    if isinstance(obs, AtomVector) and isinstance(system, FinitePermutation) and len(obs.values) != system.size:
        raise InvalidInputError(f'atom vector has {len(obs.values)} entries, system has {system.size} atoms')

    values = np.atleast_1d(evaluate(obs, states))
    provenance = Provenance(
        system=system.label if system is not None else 'unknown',
        observable=obs.label,
        seed=seed,
        length=int(values.size),
    )
    return TrajectoryBuffer(values=values, provenance=provenance)
