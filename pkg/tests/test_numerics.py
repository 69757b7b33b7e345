import numpy as np
import pytest

from src.core.exceptions import InvalidInputError, NumericalDegeneracyError
from src.numerics import (
    companion_eigenvalues,
    dft,
    idft,
    least_squares_solve,
    normal_equations_solve,
    spd_solve,
)


def _nearest_gap(values: np.ndarray, expected: np.ndarray) -> float:
    return float(np.abs(values[:, None] - expected[None, :]).min(axis=0).max())


def test_least_squares_full_rank():
    A = np.array([[1.0, 0.0], [0.0, 1.0], [1.0, 1.0]])
    result = least_squares_solve(A, A @ np.array([2.0, 3.0]))

    np.testing.assert_allclose(result.x, [2.0, 3.0], atol=1e-12)
    assert not result.degenerate
    assert result.rank == 2
    assert result.residual_norm < 1e-12


def test_least_squares_rank_deficient_is_ridged():
    A = np.array([[1.0, 1.0], [2.0, 2.0], [3.0, 3.0]])
    y = np.array([1.0, 2.0, 3.0])
    result = least_squares_solve(A, y)

    assert result.degenerate
    assert result.rank == 1
    assert result.ridge > 0
    np.testing.assert_allclose(A @ result.x, y, atol=1e-6)
    np.testing.assert_allclose(result.x, [0.5, 0.5], atol=1e-6)


def test_least_squares_zero_matrix():
    result = least_squares_solve(np.zeros((4, 2)), np.ones(4))
    assert result.degenerate
    assert result.rank == 0
    np.testing.assert_array_equal(result.x, [0.0, 0.0])


def test_least_squares_rejects_bad_input():
    with pytest.raises(InvalidInputError):
        least_squares_solve(np.array([[1.0, np.nan]]), np.array([1.0]))
    with pytest.raises(InvalidInputError):
        least_squares_solve(np.eye(3), np.ones(2))


def test_spd_solve_positive_definite():
    G = np.array([[4.0, 1.0], [1.0, 3.0]])
    b = np.array([1.0, 2.0])
    result = spd_solve(G, b)

    np.testing.assert_allclose(result.x, np.linalg.solve(G, b), rtol=1e-12)
    assert not result.degenerate
    assert result.jitter == 0.0


def test_spd_solve_semidefinite_gets_jitter():
    G = np.ones((2, 2))
    b = np.ones(2)
    result = spd_solve(G, b)

    assert result.degenerate
    assert result.jitter > 0
    np.testing.assert_allclose(G @ result.x, b, atol=1e-6)


def test_spd_solve_indefinite_raises():
    with pytest.raises(NumericalDegeneracyError):
        spd_solve(-np.eye(2), np.ones(2))


def test_spd_solve_requires_symmetry():
    with pytest.raises(InvalidInputError):
        spd_solve(np.array([[1.0, 2.0], [0.0, 1.0]]), np.ones(2))


def test_normal_equations_match_qr(rng):
    A = rng.standard_normal((50, 4))
    y = rng.standard_normal(50)
    np.testing.assert_allclose(normal_equations_solve(A, y).x, least_squares_solve(A, y).x, rtol=1e-9)


def test_companion_roots_of_unity():
    spectrum = companion_eigenvalues([0.0, 0.0, 1.0])
    expected = np.exp(2j * np.pi * np.arange(3) / 3)

    assert spectrum.values.size == 3
    assert _nearest_gap(spectrum.values, expected) < 1e-12
    assert spectrum.max_residual < 1e-12
    assert spectrum.max_modulus == pytest.approx(1.0, abs=1e-12)


def test_companion_single_coefficient():
    spectrum = companion_eigenvalues([0.5])
    np.testing.assert_allclose(spectrum.values, [0.5])


def test_companion_needs_coefficients():
    with pytest.raises(InvalidInputError):
        companion_eigenvalues([])


def test_dft_convention():
    np.testing.assert_allclose(dft([1.0, 0.0, 0.0, 0.0]), np.ones(4))
    np.testing.assert_allclose(dft([0.0, 1.0, 0.0, 0.0]), [1.0, -1j, -1.0, 1j], atol=1e-15)


def test_idft_inverts_dft(rng):
    v = rng.standard_normal(9)
    np.testing.assert_allclose(idft(dft(v)).real, v, atol=1e-14)


def test_dft_rejects_empty():
    with pytest.raises(InvalidInputError):
        dft([])


def test_least_squares_is_stationary(rng):
    A = rng.standard_normal((60, 5))
    y = rng.standard_normal(60)
    x = least_squares_solve(A, y).x

    np.testing.assert_allclose(A.T @ (A @ x - y), 0.0, atol=1e-10)
    base = np.linalg.norm(A @ x - y)
    for e in np.eye(5):
        assert np.linalg.norm(A @ (x + 1e-6 * e) - y) >= base - 1e-8


@pytest.mark.parametrize('d', [1, 2, 16, 64, 256])
def test_companion_residual_and_vieta(d, rng):
    c = rng.uniform(0.5, 1.0, d) * rng.choice([-1.0, 1.0], d)
    c *= 10.0 / np.abs(c).sum()
    spectrum = companion_eigenvalues(c)

    assert spectrum.values.size == d
    assert spectrum.max_residual <= 1e-8
    assert abs(spectrum.values.sum() - c[0]) <= 1e-6
    product = np.prod(spectrum.values)
    expected = (-1.0) ** (d + 1) * c[-1]
    assert abs(product - expected) <= 1e-6 * abs(expected)


@pytest.mark.parametrize('n', [1, 2, 7, 64, 1000, 4096])
def test_idft_round_trip(n, rng):
    v = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    np.testing.assert_allclose(idft(dft(v)), v, atol=1e-10)
