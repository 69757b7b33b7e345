"""
Pseudospectral bound for the eigenvalues of U_d.

Every eigenvalue lambda of U_d lies in the epsilon-pseudospectrum of U with

    epsilon = ||P_perp(K_d) U f|| / ||P_perp(K_d^-) f||,

where K_d^- is spanned by f o T^-1, ..., f o T^-(d-1). Both residuals are computed from
autocorrelations alone, so epsilon is available for any Gram summary.
"""

import math

import numpy as np
import scipy.linalg

from src.core.exceptions import InvalidInputError, NumericalDegeneracyError
from src.core.logger import get_logger
from src.diagnostics.models import PseudospectrumReport
from src.filter import GramSummary, eigenpairs, fit_from_gram, toeplitz_system
from src.numerics import spd_solve
from src.observables import AtomVector
from src.oracle import FiniteSystem, delay_basis, exact_autocorr, koopman_matrix, norm

logger = get_logger(__name__)

ROUNDOFF = 1e-12
DEGENERATE_RESIDUAL = 1e-12
VERIFY_TOLERANCE = 1e-8


def _clamp(residual: float, scale: float, what: str) -> float:
    """Residuals within the round-off band |r| <= 1e-12 A(0) are zero."""
    band = ROUNDOFF * scale
    if residual > band:
        return residual
    if residual < -band:
        logger.warning('Negative projection residual clamped', context={'residual': residual, 'what': what})
    return 0.0


def projection_residual(g: GramSummary, d: int) -> float:
    """||P_perp(K_d) U f||^2 = A(0) - b^T G^-1 b."""
    G, b = toeplitz_system(g, d)
    solution = spd_solve(G, b)
    a0 = float(g.autocorr[0])
    return _clamp(a0 - float(b @ solution.x), a0, 'numerator')


def predecessor_residual(g: GramSummary, d: int) -> float:
    """||P_perp(K_d^-) f||^2; K_1^- is empty so this is A(0) at d = 1."""
    a0 = float(g.autocorr[0])
    if d == 1:
        return a0
    G = scipy.linalg.toeplitz(g.autocorr[: d - 1])
    b = g.autocorr[1:d]
    solution = spd_solve(G, b)
    return _clamp(a0 - float(b @ solution.x), a0, 'denominator')


def pseudospec_epsilon(g: GramSummary, d: int) -> float:
    if d < 1:
        raise InvalidInputError(f'delay depth must be positive, got {d}')
    denominator = predecessor_residual(g, d)
    if denominator <= DEGENERATE_RESIDUAL * float(g.autocorr[0]):
        raise NumericalDegeneracyError(f'f lies in the span of its {d - 1} predecessors, epsilon is undefined')
    return math.sqrt(projection_residual(g, d) / denominator)


def verify_pseudospectrum(sys: FiniteSystem, f: AtomVector | np.ndarray, d: int) -> PseudospectrumReport:
    """
    Exact check of ||U phi - lambda phi|| <= epsilon for every eigenpair of U_d on a finite oracle.

    phi is the eigenvector lifted from the delay basis to the N atoms and normalized to unit
    L2 norm through the exact Gram matrix.
    """
    if d < 1 or d > sys.N:
        raise InvalidInputError(f'delay depth must lie in 1..{sys.N}, got {d}')

    g = exact_autocorr(sys, f, d)
    epsilon = pseudospec_epsilon(g, d)
    model = fit_from_gram(g, d)
    if model.degenerate_fit:
        raise NumericalDegeneracyError(f'delay basis of depth {d} is degenerate on {sys.N} atoms')

    pairs = eigenpairs(model)
    G, _ = toeplitz_system(g, d)
    basis = delay_basis(sys, f, d)
    K = koopman_matrix(sys)

    residuals = np.empty(pairs.values.size)
    for i, (value, vector) in enumerate(zip(pairs.values, pairs.eigenvectors.T, strict=True)):
        scale = math.sqrt(float(np.real(np.conj(vector) @ G @ vector)))
        phi = basis @ (vector / scale)
        residuals[i] = norm(K @ phi - value * phi)

    report = PseudospectrumReport(
        d=d,
        epsilon=epsilon,
        eigenvalues=pairs.values,
        residuals=residuals,
        tolerance=VERIFY_TOLERANCE,
    )
    logger.debug(
        'Pseudospectrum verified',
        context={'N': sys.N, 'd': d, 'epsilon': epsilon, 'worst_defect': report.worst_defect},
    )
    return report
