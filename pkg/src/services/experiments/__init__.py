from src.services.experiments.base import BaseExperiment
from src.services.experiments.models import ErgodicResult, FlowTimeCurve, LorenzResult, RunSettings
from src.services.experiments.registry import EXPERIMENTS, get_experiment, run_experiment

__all__ = [
    'EXPERIMENTS',
    'BaseExperiment',
    'ErgodicResult',
    'FlowTimeCurve',
    'LorenzResult',
    'RunSettings',
    'get_experiment',
    'run_experiment',
]
