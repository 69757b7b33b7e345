import numpy as np

from src.filter.models import FilterModel
from src.numerics import ComplexSpectrum, companion_eigenvalues
from src.numerics.linalg import characteristic_polynomial


def companion(model: FilterModel) -> np.ndarray:
    """
    Matrix of U_d in the delay basis (f, f o T^-1, ..., f o T^-(d-1)).

    Column 0 holds c; entries (i-1, i) are one.
    """
    matrix = np.eye(model.d, k=1)
    matrix[:, 0] = model.c
    return matrix


def spectrum(model: FilterModel) -> ComplexSpectrum:
    return companion_eigenvalues(model.c)


def eigenpairs(model: FilterModel) -> ComplexSpectrum:
    """Eigenvalues of U_d with eigenvectors (columns) expressed in the delay basis."""
    values, vectors = np.linalg.eig(companion(model))
    poly = characteristic_polynomial(model.c)
    residuals = np.abs(np.polyval(poly, values)) / (1.0 + np.abs(values) ** model.d)
    return ComplexSpectrum(values=values, residuals=residuals, eigenvectors=vectors)
