from src.oracle.cyclicity import decay_probe, dft_cyclicity, is_cyclic, krylov_matrix, prevalence_probe
from src.oracle.koopman import (
    atom_values,
    delay_basis,
    exact_autocorr,
    inner,
    koopman_matrix,
    norm,
    oracle_signal,
)
from src.oracle.models import (
    FiniteSystem,
    SpectralAtom,
    SzegoResult,
    SzegoVerdict,
    TraceMeasure,
    VandermondeCertificate,
)
from src.oracle.spectral import apply_polynomial, cycles, trace_measure, weak_pred_vandermonde
from src.oracle.szego import szego_log_integral

__all__ = [
    'FiniteSystem',
    'SpectralAtom',
    'SzegoResult',
    'SzegoVerdict',
    'TraceMeasure',
    'VandermondeCertificate',
    'apply_polynomial',
    'atom_values',
    'cycles',
    'decay_probe',
    'delay_basis',
    'dft_cyclicity',
    'exact_autocorr',
    'inner',
    'is_cyclic',
    'koopman_matrix',
    'krylov_matrix',
    'norm',
    'oracle_signal',
    'prevalence_probe',
    'szego_log_integral',
    'trace_measure',
    'weak_pred_vandermonde',
]
