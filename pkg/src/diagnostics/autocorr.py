import math

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view
from numpy.typing import ArrayLike

from src.core.exceptions import InvalidInputError
from src.core.logger import get_logger
from src.diagnostics.models import AutocorrReport, BoundCheck
from src.diagnostics.pseudospectrum import projection_residual, pseudospec_epsilon
from src.dynamics import SystemSpec, sample_initials, step
from src.filter import FilterModel, GramSource, GramSummary, TrajectoryBuffer, rollout
from src.observables import ObservableSpec, evaluate

logger = get_logger(__name__)

EXACT_TOLERANCE = 1e-10


def _report(snippets: np.ndarray, continuation: np.ndarray, model: FilterModel) -> AutocorrReport:
    """
    snippets: (N, d) observed windows ending at x_d; continuation: (N, n_max + 1) true values
    f(x_d), f(x_{d+1}), ... The anchor column is shared, so lag 0 agrees bitwise.
    """
    n_max = continuation.shape[1] - 1
    anchor = continuation[:, 0]
    predicted = np.empty_like(continuation)
    predicted[:, 0] = anchor
    predicted[:, 1:] = rollout(model, snippets, n_max)
    return AutocorrReport(
        a_true=np.mean(anchor[:, np.newaxis] * continuation, axis=0),
        a_filter=np.mean(anchor[:, np.newaxis] * predicted, axis=0),
        d=model.d,
        N=int(anchor.size),
    )


def autocorr_from_states(
    sys: SystemSpec,
    obs: ObservableSpec,
    model: FilterModel,
    initials: ArrayLike,
    n_max: int,
) -> AutocorrReport:
    """
    Snippet protocol on explicit initial states x_1: observe f along x_1..x_d, then continue
    every snippet by the true map (A) and by iterated filtering (A_d).
    """
    if n_max < 1:
        raise InvalidInputError(f'n_max must be at least 1, got {n_max}')
    states = np.asarray(initials)
    d = model.d

    snippets = np.empty((states.shape[0], d))
    for k in range(d):
        if k:
            states = step(sys, states)
        snippets[:, k] = evaluate(obs, states)

    continuation = np.empty((states.shape[0], n_max + 1))
    continuation[:, 0] = snippets[:, -1]
    for n in range(1, n_max + 1):
        states = step(sys, states)
        continuation[:, n] = evaluate(obs, states)

    return _report(snippets, continuation, model)


def autocorr_protocol(
    sys: SystemSpec,
    obs: ObservableSpec,
    model: FilterModel,
    N: int,
    n_max: int,
    seed: int,
) -> AutocorrReport:
    """A(n) and A_d(n), n = 0..n_max, on N snippets started at sampled initial points."""
    initials = sample_initials(sys, N, seed)
    report = autocorr_from_states(sys, obs, model, initials, n_max)
    logger.info('Autocorrelation protocol finished', context={'d': model.d, 'N': N, 'n_max': n_max, 'seed': seed})
    return report


def autocorr_from_series(y: TrajectoryBuffer, model: FilterModel, n_max: int) -> AutocorrReport:
    """Snippet protocol with the snippets taken as consecutive windows of one observed series."""
    if n_max < 1:
        raise InvalidInputError(f'n_max must be at least 1, got {n_max}')
    values = y.values
    d = model.d
    count = values.size - d - n_max + 1
    if count < 1:
        raise InvalidInputError(f'series of length {values.size} is too short for d={d}, n_max={n_max}')
    snippets = sliding_window_view(values, d)[:count]
    continuation = sliding_window_view(values[d - 1 :], n_max + 1)[:count]
    return _report(snippets, continuation, model)


def autocorr_time_average(y: TrajectoryBuffer, n_max: int) -> np.ndarray:
    """Birkhoff estimate (1/(m-n+1)) sum_t y_t y_{t+n} for n = 0..n_max."""
    values = y.values
    if n_max < 0 or values.size <= n_max:
        raise InvalidInputError(f'buffer of length {values.size} is too short for n_max={n_max}')
    return np.array([np.mean(values[: values.size - n] * values[n:]) for n in range(n_max + 1)])


def empirical_gram(y: TrajectoryBuffer, n_max: int) -> GramSummary:
    return GramSummary(
        autocorr=autocorr_time_average(y, n_max),
        source=GramSource.EMPIRICAL_TIME_AVERAGE,
        sample_size=len(y) - n_max,
    )


def autocorr_bound_check(report: AutocorrReport, g: GramSummary, fnorm: float) -> BoundCheck:
    """
    |A(n) - A_d(n)| against 0 for n <= d, ||U_d f - U f|| ||f|| for n = d+1 and
    (n-d) eps ||f||^2 beyond. Empirical sources get the slack 3 A(0) / sqrt(N).
    """
    d = report.d
    lags = report.lags
    differences = np.abs(report.a_true - report.a_filter)

    forecast_residual = math.sqrt(projection_residual(g, d))
    bounds = np.zeros(lags.size)
    bounds[lags == d + 1] = forecast_residual * fnorm
    beyond = lags >= d + 2
    if np.any(beyond):
        bounds[beyond] = (lags[beyond] - d) * pseudospec_epsilon(g, d) * fnorm**2

    if g.is_exact:
        tolerance = EXACT_TOLERANCE
    else:
        tolerance = EXACT_TOLERANCE + 3.0 * float(report.a_true[0]) / math.sqrt(report.N)
    return BoundCheck(differences=differences, bounds=bounds, tolerance=tolerance)
