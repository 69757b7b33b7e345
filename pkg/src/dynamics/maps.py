"""Forward and inverse maps of the supported systems, and trajectory generation."""

import numpy as np
from numpy.typing import ArrayLike

from src.core.exceptions import InvalidInputError
from src.dynamics.models import (
    AffineTwist,
    FinitePermutation,
    Lorenz63,
    Odometer,
    SystemSpec,
    TorusRotation,
)


def _mod1(values: np.ndarray) -> np.ndarray:
    reduced = values - np.floor(values)
    return np.where(reduced >= 1.0, 0.0, reduced)


def _continuous_state(sys: SystemSpec, x: ArrayLike) -> np.ndarray:
    state = np.asarray(x, dtype=float)
    if state.ndim == 0 or state.shape[-1] != sys.dim:
        raise InvalidInputError(f'state of shape {state.shape} does not match {sys.kind.value} (dim {sys.dim})')
    if not np.all(np.isfinite(state)):
        raise InvalidInputError('state has non-finite coordinates')
    return state


def _atom_state(sys: FinitePermutation, x: ArrayLike) -> np.ndarray:
    state = np.asarray(x)
    if not np.issubdtype(state.dtype, np.integer):
        raise InvalidInputError('finite permutation states are atom indices')
    if np.any((state < 0) | (state >= sys.size)):
        raise InvalidInputError(f'atom index outside 0..{sys.size - 1}')
    return state


def _odometer_level(gap: np.ndarray) -> np.ndarray:
    """Integer n with 2^-(n+1) < gap <= 2^-n, robust to rounding in log2."""
    n = np.floor(-np.log2(gap))
    n = np.where(gap > 2.0**-n, n - 1, n)
    return np.where(gap <= 2.0 ** -(n + 1), n + 1, n)


def _odometer_forward(x: np.ndarray) -> np.ndarray:
    if np.any((x < 0.0) | (x >= 1.0)):
        raise InvalidInputError('odometer states must lie in [0, 1); the point 1.0 has no image')
    n = _odometer_level(1.0 - x)
    return x - 1.0 + 3.0 * 2.0 ** -(n + 1)


def _odometer_backward(z: np.ndarray) -> np.ndarray:
    if np.any((z <= 0.0) | (z >= 1.0)):
        raise InvalidInputError('odometer preimages exist only for states in (0, 1)')
    # z lies in [2^-(n+1), 2^-n), the image of the n-th tower floor
    n = np.floor(-np.log2(z))
    n = np.where(z >= 2.0**-n, n - 1, n)
    n = np.where(z < 2.0 ** -(n + 1), n + 1, n)
    return z + 1.0 - 3.0 * 2.0 ** -(n + 1)


def _lorenz_rhs(sys: Lorenz63, x: np.ndarray) -> np.ndarray:
    x1, x2, x3 = x[..., 0], x[..., 1], x[..., 2]
    return np.stack(
        [sys.sigma * (x2 - x1), x1 * (sys.rho - x3) - x2, x1 * x2 - sys.beta * x3],
        axis=-1,
    )


def _lorenz_flow(sys: Lorenz63, x: np.ndarray) -> np.ndarray:
    h = sys.rk4_step
    for _ in range(sys.substeps):
        k1 = _lorenz_rhs(sys, x)
        k2 = _lorenz_rhs(sys, x + 0.5 * h * k1)
        k3 = _lorenz_rhs(sys, x + 0.5 * h * k2)
        k4 = _lorenz_rhs(sys, x + h * k3)
        x = x + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
    return x


def _lorenz_flow_point(sys: Lorenz63, x1: float, x2: float, x3: float) -> tuple[float, float, float]:
    """Scalar RK4 with the same operation order as _lorenz_flow; avoids numpy overhead on single states."""
    sigma, rho, beta, h = sys.sigma, sys.rho, sys.beta, sys.rk4_step
    half, sixth = 0.5 * h, h / 6.0
    for _ in range(sys.substeps):
        a1, a2, a3 = sigma * (x2 - x1), x1 * (rho - x3) - x2, x1 * x2 - beta * x3
        y1, y2, y3 = x1 + half * a1, x2 + half * a2, x3 + half * a3
        b1, b2, b3 = sigma * (y2 - y1), y1 * (rho - y3) - y2, y1 * y2 - beta * y3
        y1, y2, y3 = x1 + half * b1, x2 + half * b2, x3 + half * b3
        c1, c2, c3 = sigma * (y2 - y1), y1 * (rho - y3) - y2, y1 * y2 - beta * y3
        y1, y2, y3 = x1 + h * c1, x2 + h * c2, x3 + h * c3
        e1, e2, e3 = sigma * (y2 - y1), y1 * (rho - y3) - y2, y1 * y2 - beta * y3
        x1 = x1 + sixth * (a1 + 2.0 * b1 + 2.0 * c1 + e1)
        x2 = x2 + sixth * (a2 + 2.0 * b2 + 2.0 * c2 + e2)
        x3 = x3 + sixth * (a3 + 2.0 * b3 + 2.0 * c3 + e3)
    return x1, x2, x3


def step(sys: SystemSpec, x: ArrayLike) -> np.ndarray:
    """
    Apply the map T once.

    Continuous states carry their coordinates on the last axis; leading axes are batch axes.
    Finite permutation states are integer atom indices of any shape.
    """
    match sys:
        case TorusRotation():
            state = _continuous_state(sys, x)
            return _mod1(state + np.asarray(sys.alpha))
        case AffineTwist():
            state = _continuous_state(sys, x)
            x1, x2 = state[..., 0], state[..., 1]
            return _mod1(np.stack([x1 + sys.alpha, x1 + x2], axis=-1))
        case Odometer():
            state = _continuous_state(sys, x)
            return _odometer_forward(state)
        case Lorenz63():
            state = _continuous_state(sys, x)
            if state.ndim == 1:
                return np.array(_lorenz_flow_point(sys, *map(float, state)))
            return _lorenz_flow(sys, state)
        case FinitePermutation():
            state = _atom_state(sys, x)
            return np.asarray(sys.perm)[state]
    raise InvalidInputError(f'unsupported system {sys!r}')


def inverse_step(sys: SystemSpec, x: ArrayLike) -> np.ndarray:
    """Apply T^-1 for the systems with a closed-form inverse."""
    match sys:
        case TorusRotation():
            state = _continuous_state(sys, x)
            return _mod1(state - np.asarray(sys.alpha))
        case AffineTwist():
            state = _continuous_state(sys, x)
            x1 = state[..., 0] - sys.alpha
            return _mod1(np.stack([x1, state[..., 1] - x1], axis=-1))
        case Odometer():
            state = _continuous_state(sys, x)
            return _odometer_backward(state)
        case FinitePermutation():
            state = _atom_state(sys, x)
            return np.argsort(np.asarray(sys.perm))[state]
    raise InvalidInputError(f'no closed-form inverse for {getattr(sys, "kind", sys)!r}')


def trajectory(sys: SystemSpec, x0: ArrayLike, length: int) -> np.ndarray:
    """Return (x0, T x0, ..., T^(length-1) x0) stacked along the first axis."""
    if length < 1:
        raise InvalidInputError(f'trajectory length must be at least 1, got {length}')

    if isinstance(sys, Lorenz63):
        state = _continuous_state(sys, x0)
        if state.ndim != 1:
            raise InvalidInputError('trajectory expects a single initial state')
        points = np.empty((length, 3))
        point = tuple(map(float, state))
        points[0] = point
        for i in range(1, length):
            point = _lorenz_flow_point(sys, *point)
            points[i] = point
        return points

    states = [np.asarray(x0)]
    for _ in range(length - 1):
        states.append(step(sys, states[-1]))
    return np.stack(states)


def subsample_flow(sys: Lorenz63, points: np.ndarray, stride: int) -> tuple[Lorenz63, np.ndarray]:
    """
    Every stride-th state of a flow trajectory, with the matching coarser system.

    RK4 at a fixed step composes exactly, so this equals the trajectory of the
    flow map with flow_time * stride.
    """
    if stride < 1:
        raise InvalidInputError('stride must be positive')
    coarse = sys.model_copy(update={'flow_time': sys.flow_time * stride})
    return coarse, points[::stride]
