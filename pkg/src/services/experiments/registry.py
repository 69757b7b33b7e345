from pathlib import Path

from src.core.config import ExperimentConfig, env_config
from src.core.exceptions import InvalidInputError
from src.services.experiments.base import BaseExperiment
from src.services.experiments.ergodic import (
    OdometerExperiment,
    OdometerSpectrumExperiment,
    TorusF1Experiment,
    TorusF2Experiment,
    TwistExperiment,
    TwistWeakExperiment,
    TwistX1Experiment,
)
from src.services.experiments.lorenz import LorenzBumpExperiment, LorenzX1Experiment

EXPERIMENTS: dict[str, type[BaseExperiment]] = {
    experiment.name: experiment
    for experiment in (
        TorusF1Experiment,
        TorusF2Experiment,
        TwistExperiment,
        TwistWeakExperiment,
        TwistX1Experiment,
        OdometerExperiment,
        OdometerSpectrumExperiment,
        LorenzX1Experiment,
        LorenzBumpExperiment,
    )
}


def get_experiment(name: str, workers: int = env_config.WORKERS) -> BaseExperiment:
    try:
        return EXPERIMENTS[name](workers=workers)
    except KeyError:
        raise InvalidInputError(f'unknown experiment {name!r}, expected one of {", ".join(EXPERIMENTS)}') from None


async def run_experiment(cfg: ExperimentConfig) -> Path:
    return await get_experiment(cfg.experiment).run(cfg)
