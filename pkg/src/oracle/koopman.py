import numpy as np
from numpy.typing import ArrayLike

from src.core.exceptions import InvalidInputError
from src.dynamics.maps import trajectory
from src.filter.models import GramSource, GramSummary, TrajectoryBuffer
from src.observables import AtomVector, observe
from src.oracle.models import FiniteSystem


def atom_values(sys: FiniteSystem, f: AtomVector | ArrayLike) -> np.ndarray:
    values = np.asarray(f.values if isinstance(f, AtomVector) else f, dtype=float)
    if values.shape != (sys.N,):
        raise InvalidInputError(f'observable has shape {values.shape}, system has {sys.N} atoms')
    if not np.all(np.isfinite(values)):
        raise InvalidInputError('observable values must be finite')
    return values


def koopman_matrix(sys: FiniteSystem) -> np.ndarray:
    """Permutation matrix with (U f)(i) = f(perm(i))."""
    matrix = np.zeros((sys.N, sys.N))
    matrix[np.arange(sys.N), np.asarray(sys.perm)] = 1.0
    return matrix


def inner(f: np.ndarray, g: np.ndarray) -> complex:
    """<f, g> = (1/N) sum f(i) conj(g(i))."""
    return complex(np.mean(f * np.conj(g)))


def norm(f: np.ndarray) -> float:
    return float(np.sqrt(np.mean(np.abs(f) ** 2)))


def exact_autocorr(sys: FiniteSystem, f: AtomVector | ArrayLike, n_max: int) -> GramSummary:
    """A(n) = (1/N) sum_i f(perm^n(i)) f(i) for n = 0..n_max."""
    values = atom_values(sys, f)
    perm = np.asarray(sys.perm)
    index = np.arange(sys.N)
    autocorr = np.empty(n_max + 1)
    for n in range(n_max + 1):
        autocorr[n] = np.mean(values[index] * values)
        index = perm[index]
    return GramSummary(autocorr=autocorr, source=GramSource.EXACT_ORACLE, sample_size=sys.N)


def delay_basis(sys: FiniteSystem, f: AtomVector | ArrayLike, d: int) -> np.ndarray:
    """Columns f, f o T^-1, ..., f o T^-(d-1) as vectors on the atoms."""
    values = atom_values(sys, f)
    inverse = np.argsort(np.asarray(sys.perm))
    basis = np.empty((sys.N, d))
    column = values
    for j in range(d):
        basis[:, j] = column
        column = column[inverse]
    return basis


def oracle_signal(sys: FiniteSystem, f: AtomVector, start: int, length: int) -> TrajectoryBuffer:
    """Observations f(start), f(T start), ... along one orbit."""
    return observe(f, trajectory(sys, np.int64(start), length), system=sys)
