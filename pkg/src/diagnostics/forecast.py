from collections.abc import Sequence

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from src.core.exceptions import InvalidInputError
from src.core.logger import get_logger
from src.diagnostics.models import ErrorCurve
from src.filter import FilterModel, TrajectoryBuffer, fit, rollout

logger = get_logger(__name__)


def forecast_mse(model: FilterModel, test: TrajectoryBuffer, steps: int = 1) -> float:
    """
    Slide the filter along a testing trajectory: from every window ending at t, roll the filter
    `steps` times and compare with y_{t+steps}. Returns the mean squared error.
    """
    if steps < 1:
        raise InvalidInputError(f'prediction horizon must be at least one step, got {steps}')
    values = test.values
    d = model.d
    if values.size < d + steps:
        raise InvalidInputError(f'testing buffer of length {values.size} is shorter than d + steps = {d + steps}')

    count = values.size - d - steps + 1
    windows = sliding_window_view(values, d)[:count]
    targets = values[d - 1 + steps :]
    predictions = rollout(model, windows, steps)[:, -1]
    return float(np.mean((predictions - targets) ** 2))


def error_curve(
    y_train: TrajectoryBuffer,
    y_test: TrajectoryBuffer,
    depths: Sequence[int],
    steps: int = 1,
    row_start: int | None = None,
) -> ErrorCurve:
    """
    Fit at every depth on the training buffer and evaluate on the testing buffer.

    row_start = max(depths) - 1 fits every depth on the common sample window.
    """
    if not depths:
        raise InvalidInputError('error curve needs at least one depth')

    models = [fit(y_train, d, row_start=row_start) for d in depths]
    mse = np.array([forecast_mse(model, y_test, steps) for model in models])
    logger.debug(
        'Error curve computed',
        context={'depths': [min(depths), max(depths)], 'steps': steps, 'best_mse': float(mse.min())},
    )
    return ErrorCurve(
        depths=tuple(depths),
        mse=mse,
        steps=steps,
        objectives=np.array([model.objective for model in models]),
        degenerate=tuple(model.degenerate_fit for model in models),
    )
