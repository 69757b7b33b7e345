from collections.abc import Sequence
from itertools import pairwise

import numpy as np

from src.core.exceptions import InvalidInputError
from src.core.logger import get_logger
from src.diagnostics.models import StabilityProbe
from src.filter import TrajectoryBuffer, fit, spectrum

logger = get_logger(__name__)


def filter_stability_probe(y: TrajectoryBuffer, d: int) -> StabilityProbe:
    """
    Fit on prefixes of length 2d, 4d, 8d, ... and report ||c_2m - c_m||.

    A convergence monitor only: no rate is asserted, and degenerate fits are flagged.
    """
    if d < 1:
        raise InvalidInputError(f'delay depth must be positive, got {d}')
    if len(y) < 4 * d:
        raise InvalidInputError(f'stability probe needs at least {4 * d} values, got {len(y)}')

    lengths = []
    length = 2 * d
    while length <= len(y):
        lengths.append(length)
        length *= 2

    models = [fit(y.slice(0, length), d) for length in lengths]
    distances = np.array([np.linalg.norm(b.c - a.c) for a, b in pairwise(models)])
    degenerate = any(model.degenerate_fit for model in models)
    if degenerate:
        logger.warning('Stability probe saw degenerate fits', context={'d': d, 'lengths': lengths})
    return StabilityProbe(lengths=tuple(lengths), distances=distances, degenerate=degenerate)


def hausdorff_distance(a: np.ndarray, b: np.ndarray) -> float:
    gaps = np.abs(a[:, np.newaxis] - b[np.newaxis, :])
    return float(max(gaps.min(axis=1).max(), gaps.min(axis=0).max()))


def eigenvalue_drift(y: TrajectoryBuffer, depths: Sequence[int]) -> np.ndarray:
    """
    Hausdorff distance between the spectra of U_d at consecutive depths.

    Logged as a monitor of eigenvalue convergence along d; nothing is asserted about it.
    """
    if len(depths) < 2:
        raise InvalidInputError('eigenvalue drift needs at least two depths')
    spectra = [spectrum(fit(y, d)).values for d in depths]
    drift = np.array([hausdorff_distance(a, b) for a, b in pairwise(spectra)])
    logger.info('Eigenvalue drift', context={'depths': list(depths), 'drift': drift})
    return drift


def dyadic_alignment(values: np.ndarray, n: int, tol: float = 0.05) -> float:
    """Fraction of eigenvalues within tol of the nearest n-th root of unity exp(2 pi i k / n)."""
    if n < 1:
        raise InvalidInputError(f'root count must be positive, got {n}')
    values = np.asarray(values, dtype=complex)
    if values.size == 0:
        return 0.0
    k = np.round(np.angle(values) * n / (2 * np.pi))
    nearest = np.exp(2j * np.pi * k / n)
    return float(np.mean(np.abs(values - nearest) <= tol))
