from src.numerics.fourier import dft, idft
from src.numerics.linalg import (
    companion_eigenvalues,
    least_squares_solve,
    normal_equations_solve,
    spd_solve,
)
from src.numerics.models import ComplexSpectrum, LeastSquaresResult, SpdSolveResult

__all__ = [
    'ComplexSpectrum',
    'LeastSquaresResult',
    'SpdSolveResult',
    'companion_eigenvalues',
    'dft',
    'idft',
    'least_squares_solve',
    'normal_equations_solve',
    'spd_solve',
]
