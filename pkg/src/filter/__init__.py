from src.filter.fit import fit, fit_from_gram, toeplitz_system
from src.filter.hankel import build_hankel
from src.filter.models import FilterModel, GramSource, GramSummary, Provenance, TrajectoryBuffer
from src.filter.predict import predict_iterated, predict_one, rollout
from src.filter.spectrum import companion, eigenpairs, spectrum

__all__ = [
    'FilterModel',
    'GramSource',
    'GramSummary',
    'Provenance',
    'TrajectoryBuffer',
    'build_hankel',
    'companion',
    'eigenpairs',
    'fit',
    'fit_from_gram',
    'predict_iterated',
    'predict_one',
    'rollout',
    'spectrum',
    'toeplitz_system',
]
