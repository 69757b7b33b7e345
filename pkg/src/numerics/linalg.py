"""Dense least squares, SPD solves and companion-polynomial roots."""

import numpy as np
import scipy.linalg
from numpy.typing import ArrayLike

from src.core.exceptions import InvalidInputError, NumericalDegeneracyError
from src.core.logger import get_logger
from src.numerics.models import ComplexSpectrum, LeastSquaresResult, SpdSolveResult

logger = get_logger(__name__)

RIDGE_FACTOR = 1e-12
JITTER_FACTOR = 1e-12
JITTER_GROWTH = 100.0
MAX_JITTER_ESCALATIONS = 3
# Cholesky pivots below this fraction of the largest one count as a failed factorization.
PIVOT_RATIO = 1e-14
SYMMETRY_TOL = 1e-12
NEWTON_POLISH_STEPS = 3


def as_matrix(A: ArrayLike, name: str = 'A') -> np.ndarray:
    matrix = np.asarray(A, dtype=float)
    if matrix.ndim != 2 or matrix.size == 0:
        raise InvalidInputError(f'{name} must be a nonempty 2-D matrix, got shape {matrix.shape}')
    if not np.all(np.isfinite(matrix)):
        raise InvalidInputError(f'{name} has non-finite entries')
    return matrix


def as_vector(v: ArrayLike, length: int | None = None, name: str = 'vector') -> np.ndarray:
    vector = np.asarray(v, dtype=float)
    if vector.ndim != 1:
        raise InvalidInputError(f'{name} must be 1-D, got shape {vector.shape}')
    if length is not None and vector.shape[0] != length:
        raise InvalidInputError(f'{name} has length {vector.shape[0]}, expected {length}')
    if not np.all(np.isfinite(vector)):
        raise InvalidInputError(f'{name} has non-finite entries')
    return vector


def least_squares_solve(A: ArrayLike, y: ArrayLike) -> LeastSquaresResult:
    """
    Minimize ||Ax - y||_2 by column-pivoted QR.

    When a pivot satisfies R_kk^2 <= tau with tau = 1e-12 * (largest column norm)^2 the
    matrix is treated as rank deficient and the Tikhonov problem with ridge tau is solved
    instead; the result is flagged degenerate.
    """
    A = as_matrix(A)
    rows, cols = A.shape
    y = as_vector(y, rows, 'y')

    scale = float(np.max(np.linalg.norm(A, axis=0)))
    if scale == 0.0:
        logger.warning('Least squares on a zero matrix', context={'shape': A.shape})
        return LeastSquaresResult(x=np.zeros(cols), degenerate=True, rank=0, residual_norm=float(np.linalg.norm(y)))

    tau = RIDGE_FACTOR * scale**2
    q, r, perm = scipy.linalg.qr(A, mode='economic', pivoting=True)
    pivots = np.abs(np.diag(r))
    rank = int(np.count_nonzero(pivots**2 > tau))

    if rank == cols:
        x = np.empty(cols)
        x[perm] = scipy.linalg.solve_triangular(r, q.T @ y)
        return LeastSquaresResult(x=x, rank=rank, residual_norm=float(np.linalg.norm(A @ x - y)))

    augmented = np.vstack([A, np.sqrt(tau) * np.eye(cols)])
    rhs = np.concatenate([y, np.zeros(cols)])
    q_aug, r_aug = scipy.linalg.qr(augmented, mode='economic')
    x = scipy.linalg.solve_triangular(r_aug, q_aug.T @ rhs)
    logger.debug('Rank-deficient least squares, ridge applied', context={'rank': rank, 'cols': cols, 'ridge': tau})
    return LeastSquaresResult(
        x=x,
        degenerate=True,
        ridge=tau,
        rank=rank,
        residual_norm=float(np.linalg.norm(A @ x - y)),
    )


def spd_solve(G: ArrayLike, b: ArrayLike) -> SpdSolveResult:
    """
    Solve Gx = b for symmetric positive (semi)definite G by Cholesky factorization.

    A failed factorization is retried with jitter 1e-12 * trace(G) / rows on the diagonal,
    escalated by a factor 100 at most three times.
    """
    G = as_matrix(G, 'G')
    rows, cols = G.shape
    if rows != cols:
        raise InvalidInputError(f'G must be square, got shape {G.shape}')
    if np.max(np.abs(G - G.T)) > SYMMETRY_TOL * max(1.0, float(np.max(np.abs(G)))):
        raise InvalidInputError('G must be symmetric')
    b = as_vector(b, rows, 'b')

    trace = float(np.trace(G))
    base = JITTER_FACTOR * (trace / rows if trace > 0 else 1.0)
    jitters = [0.0] + [base * JITTER_GROWTH**k for k in range(MAX_JITTER_ESCALATIONS + 1)]

    for jitter in jitters:
        shifted = G + jitter * np.eye(rows)
        try:
            factor, lower = scipy.linalg.cho_factor(shifted, lower=True)
        except np.linalg.LinAlgError:
            continue
        pivots = np.abs(np.diag(factor))
        if pivots.min() ** 2 <= PIVOT_RATIO * pivots.max() ** 2:
            continue
        x = scipy.linalg.cho_solve((factor, lower), b)
        if jitter > 0:
            logger.debug('Cholesky succeeded after jitter', context={'jitter': jitter, 'rows': rows})
        return SpdSolveResult(x=x, degenerate=jitter > 0, jitter=jitter)

    raise NumericalDegeneracyError(f'Cholesky factorization failed after {MAX_JITTER_ESCALATIONS} jitter escalations')


def normal_equations_solve(A: ArrayLike, y: ArrayLike) -> LeastSquaresResult:
    """Least squares through the normal equations A^T A x = A^T y."""
    A = as_matrix(A)
    y = as_vector(y, A.shape[0], 'y')
    solved = spd_solve(A.T @ A, A.T @ y)
    return LeastSquaresResult(
        x=solved.x,
        degenerate=solved.degenerate,
        ridge=solved.jitter,
        rank=A.shape[1] if not solved.degenerate else int(np.linalg.matrix_rank(A)),
        residual_norm=float(np.linalg.norm(A @ solved.x - y)),
    )


def characteristic_polynomial(c: ArrayLike) -> np.ndarray:
    """Coefficients (highest degree first) of lambda^d - sum_j c_j lambda^(d-1-j)."""
    c = as_vector(c, name='c')
    return np.concatenate([[1.0], -c])


def companion_eigenvalues(c: ArrayLike) -> ComplexSpectrum:
    """
    All roots of p(lambda) = lambda^d - sum_j c_j lambda^(d-1-j).

    Roots come from the eigenvalues of the companion matrix and are polished by a few
    Newton steps; each carries the residual |p(lambda)| / (1 + |lambda|^d).
    """
    c = as_vector(c, name='c')
    d = c.shape[0]
    if d == 0:
        raise InvalidInputError('companion polynomial needs at least one coefficient')

    poly = characteristic_polynomial(c)
    derivative = np.polyder(poly)
    roots = np.linalg.eigvals(scipy.linalg.companion(poly)).astype(complex)

    def residual(z: np.ndarray) -> np.ndarray:
        return np.abs(np.polyval(poly, z)) / (1.0 + np.abs(z) ** d)

    current = residual(roots)
    for _ in range(NEWTON_POLISH_STEPS):
        slope = np.polyval(derivative, roots)
        usable = np.abs(slope) > 0
        step = np.zeros_like(roots)
        step[usable] = np.polyval(poly, roots[usable]) / slope[usable]
        candidate = roots - step
        candidate_residual = residual(candidate)
        better = candidate_residual < current
        roots = np.where(better, candidate, roots)
        current = np.where(better, candidate_residual, current)

    return ComplexSpectrum(values=roots, residuals=current)
