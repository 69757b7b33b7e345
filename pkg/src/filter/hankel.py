import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from src.core.exceptions import InvalidInputError
from src.filter.models import TrajectoryBuffer


def build_hankel(y: TrajectoryBuffer, d: int) -> tuple[np.ndarray, np.ndarray]:
    """
    Delay matrix and targets of the one-step prediction problem.

    Row t (t = d-1..m-1) holds (y_t, y_{t-1}, ..., y_{t-d+1}); its target is y_{t+1}.
    """
    if d < 1:
        raise InvalidInputError(f'delay depth must be positive, got {d}')
    m = len(y) - 1
    if m < d:
        raise InvalidInputError(f'trajectory of length {m + 1} is too short for delay depth {d}')
    windows = sliding_window_view(y.values[:-1], d)[:, ::-1]
    return np.ascontiguousarray(windows), y.values[d:].copy()
