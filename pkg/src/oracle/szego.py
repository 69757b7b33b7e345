import numpy as np
from numpy.typing import ArrayLike

from src.core.exceptions import InvalidInputError
from src.oracle.models import SzegoResult, SzegoVerdict

MIN_GRID = 8
MIN_VANISHING_ARC = 2


def _longest_zero_arc(samples: np.ndarray) -> int:
    """Longest run of exact zeros on the circular grid."""
    zero = samples == 0.0
    if zero.all():
        return samples.size
    # rotate so the grid starts on a nonzero sample; runs then never wrap
    start = int(np.argmin(zero))
    rotated = np.roll(zero, -start)
    longest = current = 0
    for flag in rotated:
        current = current + 1 if flag else 0
        longest = max(longest, current)
    return longest


def szego_log_integral(w: ArrayLike, floor: float) -> SzegoResult:
    """
    Heuristic Szego classifier for a density sampled on a uniform grid of [0, 2 pi).

    The value is the periodic trapezoid rule applied to log(max(w, floor)). The verdict is
    szego-holds when w vanishes on a contiguous arc of at least two samples (the integral is
    truly -inf), szego-fails when w stays above the floor, and inconclusive otherwise.
    """
    samples = np.asarray(w, dtype=float)
    if samples.ndim != 1 or samples.size < MIN_GRID:
        raise InvalidInputError(f'density needs at least {MIN_GRID} grid samples')
    if floor <= 0:
        raise InvalidInputError('floor must be positive')
    if not np.all(np.isfinite(samples)) or np.any(samples < 0):
        raise InvalidInputError('density samples must be finite and nonnegative')

    value = float(2.0 * np.pi * np.mean(np.log(np.maximum(samples, floor))))

    if _longest_zero_arc(samples) >= MIN_VANISHING_ARC:
        verdict = SzegoVerdict.HOLDS
    elif samples.min() >= floor:
        verdict = SzegoVerdict.FAILS
    else:
        verdict = SzegoVerdict.INCONCLUSIVE
    return SzegoResult(value=value, verdict=verdict)
