"""
Cyclic-vector tests on finite systems.

The brute-force test checks that the Krylov vectors f, Uf, ..., U^(N-1) f span the whole
space. On an ergodic shift of Z_N the Fourier modes diagonalize U with distinct
eigenvalues, so f is cyclic exactly when none of its DFT coefficients vanishes.
"""

import math

import numpy as np
import scipy.linalg
from numpy.typing import ArrayLike

from src.core.exceptions import InvalidInputError
from src.core.logger import get_logger
from src.dynamics.sampling import make_rng
from src.numerics import dft, idft
from src.observables import AtomVector
from src.oracle.koopman import atom_values
from src.oracle.models import FiniteSystem

logger = get_logger(__name__)

RANK_TOL = 1e-10
DFT_TOL = 1e-10


def krylov_matrix(sys: FiniteSystem, f: AtomVector | ArrayLike) -> np.ndarray:
    """Columns U^k f for k = 0..N-1."""
    values = atom_values(sys, f)
    perm = np.asarray(sys.perm)
    columns = np.empty((sys.N, sys.N))
    column = values
    for k in range(sys.N):
        columns[:, k] = column
        column = column[perm]
    return columns


def is_cyclic(sys: FiniteSystem, f: AtomVector | ArrayLike) -> bool:
    krylov = krylov_matrix(sys, f)
    scale = float(np.max(np.linalg.norm(krylov, axis=0)))
    if scale == 0.0:
        return False
    r, _ = scipy.linalg.qr(krylov, mode='r', pivoting=True)
    rank = int(np.count_nonzero(np.abs(np.diag(r)) > RANK_TOL * scale))
    return rank == sys.N


def dft_cyclicity(N: int, r: int, f: AtomVector | ArrayLike) -> bool:
    """Fourier criterion for the shift i -> i + r on Z_N."""
    if math.gcd(r, N) != 1:
        raise InvalidInputError(f'shift by {r} on Z_{N} is not ergodic (gcd != 1)')
    values = atom_values(FiniteSystem.cyclic_shift(N, r), f)
    magnitudes = np.abs(dft(values))
    peak = float(magnitudes.max())
    return peak > 0.0 and float(magnitudes.min()) > DFT_TOL * peak


def decay_probe(N: int) -> AtomVector:
    """Real probe whose DFT is 1 at k = 0 and 1 / k^2 otherwise, with k folded to min(k, N - k)."""
    k = np.arange(N)
    folded = np.minimum(k, N - k).astype(float)
    spectrum = np.where(folded == 0, 1.0, 1.0 / np.maximum(folded, 1.0) ** 2)
    return AtomVector(values=tuple(float(v) for v in np.real(idft(spectrum))))


def prevalence_probe(
    N: int,
    r: int,
    f: AtomVector | ArrayLike,
    p: AtomVector | ArrayLike,
    trials: int,
    seed: int,
) -> float:
    """Fraction of lambda ~ U[-1, 1] for which f + lambda p is cyclic."""
    if trials < 1:
        raise InvalidInputError(f'prevalence probe needs at least one trial, got {trials}')
    system = FiniteSystem.cyclic_shift(N, r)
    base = atom_values(system, f)
    probe = atom_values(system, p)
    if not dft_cyclicity(N, r, probe):
        raise InvalidInputError('probe must have all DFT coefficients nonzero')

    lambdas = make_rng(seed).uniform(-1.0, 1.0, size=trials)
    hits = sum(is_cyclic(system, base + lam * probe) for lam in lambdas)
    fraction = hits / trials
    logger.debug('Prevalence probe finished', context={'N': N, 'r': r, 'trials': trials, 'fraction': fraction})
    return fraction
