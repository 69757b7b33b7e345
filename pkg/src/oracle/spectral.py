from collections import defaultdict
from fractions import Fraction

import numpy as np
import scipy.linalg
from numpy.typing import ArrayLike

from src.core.exceptions import InvalidInputError, NumericalDegeneracyError
from src.numerics import dft
from src.observables import AtomVector
from src.oracle.koopman import atom_values
from src.oracle.models import FiniteSystem, SpectralAtom, TraceMeasure, VandermondeCertificate

MIN_ATOM_WEIGHT = 1e-14
MIN_ATOM_SEPARATION = 1e-8
MAX_VANDERMONDE_ATOMS = 64


def cycles(sys: FiniteSystem) -> list[list[int]]:
    """Cycle decomposition, each cycle listed as (c, perm(c), perm^2(c), ...)."""
    seen = np.zeros(sys.N, dtype=bool)
    result = []
    for start in range(sys.N):
        if seen[start]:
            continue
        cycle = []
        atom = start
        while not seen[atom]:
            seen[atom] = True
            cycle.append(atom)
            atom = sys.perm[atom]
        result.append(cycle)
    return result


def trace_measure(sys: FiniteSystem, f: AtomVector | ArrayLike) -> TraceMeasure:
    """
    Spectral measure of U for f, computed exactly from the cycle decomposition.

    A cycle of length L carries the eigenvalues exp(2 pi i k / L) with eigenvectors given by
    the Fourier modes along the cycle; the atom weight is |<f, e_k>|^2 / ||e_k||^2. Frequencies
    are merged as exact fractions, so coincident eigenvalues of different cycles add up.
    """
    values = atom_values(sys, f)
    masses: dict[Fraction, float] = defaultdict(float)
    for cycle in cycles(sys):
        length = len(cycle)
        coefficients = dft(values[cycle])
        for k in range(length):
            masses[Fraction(k, length)] += float(np.abs(coefficients[k]) ** 2) / (sys.N * length)

    atoms = tuple(
        SpectralAtom(frequency=float(frequency), weight=weight)
        for frequency, weight in sorted(masses.items())
        if weight >= MIN_ATOM_WEIGHT
    )
    return TraceMeasure(atoms=atoms)


def weak_pred_vandermonde(nu: TraceMeasure) -> VandermondeCertificate:
    """Polynomial of degree k-1 with p(lambda_i) = 1 / lambda_i on the k atoms of nu."""
    eigenvalues = nu.eigenvalues
    k = eigenvalues.size
    if k == 0:
        raise InvalidInputError('trace measure has no atoms')
    if k > MAX_VANDERMONDE_ATOMS:
        raise InvalidInputError(f'{k} atoms exceed the Vandermonde limit of {MAX_VANDERMONDE_ATOMS}')
    if k > 1:
        gaps = np.abs(eigenvalues[:, None] - eigenvalues[None, :])
        gaps[np.diag_indices(k)] = np.inf
        if gaps.min() <= MIN_ATOM_SEPARATION:
            raise NumericalDegeneracyError(f'atoms closer than {MIN_ATOM_SEPARATION}, Vandermonde matrix is singular')

    vandermonde = np.vander(eigenvalues, k, increasing=True)
    targets = 1.0 / eigenvalues
    coefficients = scipy.linalg.solve(vandermonde, targets)
    mismatch = vandermonde @ coefficients - targets
    residual = float(np.sum(nu.weights * np.abs(mismatch) ** 2))
    return VandermondeCertificate(coefficients=coefficients, residual=residual)


def apply_polynomial(coefficients: ArrayLike, matrix: np.ndarray) -> np.ndarray:
    """sum_j a_j M^j by Horner's rule."""
    coefficients = np.asarray(coefficients)
    result = np.zeros(matrix.shape, dtype=np.result_type(coefficients, matrix))
    identity = np.eye(matrix.shape[0])
    for a in coefficients[::-1]:
        result = result @ matrix + a * identity
    return result
