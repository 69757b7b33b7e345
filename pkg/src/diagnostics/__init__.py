from src.diagnostics.autocorr import (
    autocorr_bound_check,
    autocorr_from_series,
    autocorr_from_states,
    autocorr_protocol,
    autocorr_time_average,
    empirical_gram,
)
from src.diagnostics.forecast import error_curve, forecast_mse
from src.diagnostics.models import AutocorrReport, BoundCheck, ErrorCurve, PseudospectrumReport, StabilityProbe
from src.diagnostics.pseudospectrum import (
    predecessor_residual,
    projection_residual,
    pseudospec_epsilon,
    verify_pseudospectrum,
)
from src.diagnostics.stability import dyadic_alignment, eigenvalue_drift, filter_stability_probe, hausdorff_distance

__all__ = [
    'AutocorrReport',
    'BoundCheck',
    'ErrorCurve',
    'PseudospectrumReport',
    'StabilityProbe',
    'autocorr_bound_check',
    'autocorr_from_series',
    'autocorr_from_states',
    'autocorr_protocol',
    'autocorr_time_average',
    'dyadic_alignment',
    'eigenvalue_drift',
    'empirical_gram',
    'error_curve',
    'filter_stability_probe',
    'forecast_mse',
    'hausdorff_distance',
    'predecessor_residual',
    'projection_residual',
    'pseudospec_epsilon',
    'verify_pseudospectrum',
]
