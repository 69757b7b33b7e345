import numpy as np
from numpy.typing import ArrayLike

from src.core.exceptions import InvalidInputError
from src.filter.models import FilterModel
from src.numerics.linalg import as_vector


def predict_one(model: FilterModel, window: ArrayLike) -> float:
    """Next value from a window stored oldest-first (newest last)."""
    values = as_vector(window, model.d, 'window')
    return float(model.c @ values[::-1])


def rollout(model: FilterModel, windows: ArrayLike, steps: int) -> np.ndarray:
    """
    Autoregressive continuation of a batch of windows.

    windows has shape (B, d), oldest value first. Returns the (B, steps) generated values.
    """
    batch = np.atleast_2d(np.asarray(windows, dtype=float))
    if batch.ndim != 2 or batch.shape[1] != model.d:
        raise InvalidInputError(f'windows must have shape (B, {model.d}), got {batch.shape}')
    if steps < 0:
        raise InvalidInputError('steps must be nonnegative')

    d = model.d
    weights = model.c[::-1]
    buffer = np.empty((batch.shape[0], d + steps))
    buffer[:, :d] = batch
    for k in range(steps):
        buffer[:, d + k] = buffer[:, k : k + d] @ weights
    return buffer[:, d:]


def predict_iterated(model: FilterModel, seed_window: ArrayLike, steps: int) -> np.ndarray:
    if steps < 1:
        raise InvalidInputError(f'steps must be at least 1, got {steps}')
    window = as_vector(seed_window, model.d, 'seed window')
    return rollout(model, window[np.newaxis, :], steps)[0]
