"""
Discrete Fourier transform with the convention (F v)(k) = sum_n v(n) exp(-2 pi i k n / N).

No normalization on the forward transform; the inverse divides by N.
"""

import numpy as np
from numpy.typing import ArrayLike

from src.core.exceptions import InvalidInputError


def _as_signal(v: ArrayLike) -> np.ndarray:
    signal = np.asarray(v, dtype=complex)
    if signal.ndim != 1 or signal.size == 0:
        raise InvalidInputError('DFT input must be a nonempty 1-D sequence')
    return signal


def dft(v: ArrayLike) -> np.ndarray:
    return np.fft.fft(_as_signal(v))


def idft(v: ArrayLike) -> np.ndarray:
    return np.fft.ifft(_as_signal(v))
