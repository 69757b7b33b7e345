from typing import Literal

import numpy as np
import scipy.linalg

from src.core.exceptions import InvalidInputError
from src.core.logger import get_logger
from src.filter.hankel import build_hankel
from src.filter.models import FilterModel, GramSummary, TrajectoryBuffer
from src.numerics import least_squares_solve, normal_equations_solve, spd_solve

logger = get_logger(__name__)

FitMethod = Literal['qr', 'normal']


def fit(
    y: TrajectoryBuffer,
    d: int,
    row_start: int | None = None,
    method: FitMethod = 'qr',
) -> FilterModel:
    """
    Minimize the empirical mean squared one-step error over rows t = max(d-1, row_start)..m-1.

    Passing the same row_start (e.g. D_max - 1) for every depth fits all depths on a common
    sample window, which makes the minimized objectives nested and nonincreasing in d.
    """
    H, targets = build_hankel(y, d)
    first = d - 1
    if row_start is not None:
        if row_start < d - 1:
            raise InvalidInputError(f'row_start {row_start} must be at least d - 1 = {d - 1}')
        first = row_start
    H, targets = H[first - (d - 1) :], targets[first - (d - 1) :]
    if H.shape[0] < 1:
        raise InvalidInputError(f'no rows left for d={d} after windowing at row {first}')

    solver = least_squares_solve if method == 'qr' else normal_equations_solve
    solution = solver(H, targets)
    residuals = targets - H @ solution.x

    if solution.degenerate:
        logger.warning(
            'Delay basis is numerically degenerate, ridge-regularized filter returned',
            context={'d': d, 'rank': solution.rank, 'ridge': solution.ridge, 'rows': H.shape[0]},
        )

    return FilterModel(
        d=d,
        coeffs=tuple(float(c) for c in solution.x),
        degenerate_fit=solution.degenerate,
        objective=float(np.mean(residuals**2)),
        final_residual=float(residuals[-1]),
        row_start=first,
        provenance_hash=y.provenance.digest,
    )


def toeplitz_system(g: GramSummary, d: int) -> tuple[np.ndarray, np.ndarray]:
    """G_ij = A(|i-j|) for i, j < d and b_i = A(i+1)."""
    if d < 1:
        raise InvalidInputError(f'delay depth must be positive, got {d}')
    if g.n_max < d:
        raise InvalidInputError(f'Gram summary provides lags up to {g.n_max}, depth {d} needs {d}')
    return scipy.linalg.toeplitz(g.autocorr[:d]), g.autocorr[1 : d + 1].copy()


def fit_from_gram(g: GramSummary, d: int) -> FilterModel:
    """Solve the Toeplitz normal equations; with exact autocorrelations this is the infinite-data filter."""
    G, b = toeplitz_system(g, d)
    solution = spd_solve(G, b)
    c = solution.x
    objective = float(g.autocorr[0] - 2.0 * b @ c + c @ G @ c)

    if solution.degenerate:
        logger.warning(
            'Gram matrix is numerically singular, jittered filter returned',
            context={'d': d, 'jitter': solution.jitter, 'source': g.source.value},
        )

    return FilterModel(
        d=d,
        coeffs=tuple(float(v) for v in c),
        degenerate_fit=solution.degenerate,
        objective=max(objective, 0.0),
    )
