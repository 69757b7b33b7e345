import asyncio
from abc import ABC, abstractmethod
from collections.abc import Callable, Sequence
from pathlib import Path
from typing import Any, Generic, TypeVar

import numpy as np
from pydantic import BaseModel

from src.core.config import ExperimentConfig, env_config
from src.core.exceptions import InvalidInputError
from src.core.logger import get_logger
from src.diagnostics import ErrorCurve, error_curve
from src.filter import TrajectoryBuffer
from src.integrations.files import RunDirectory, write_json
from src.services.experiments.models import RunSettings

logger = get_logger(__name__)

T = TypeVar('T', bound=BaseModel)

# independent PCG64 streams for the training orbit, the testing orbit and the snippet ensemble
TRAIN_STREAM = 0
TEST_STREAM = 1
ENSEMBLE_STREAM = 2


class BaseExperiment(ABC, Generic[T]):  # noqa
    """
    Base class for registered experiments.

    Subclasses set name and defaults, compute a typed result and write its files;
    the base class resolves the configuration, owns the run directory and the manifest.
    """

    name: str = ''
    description: str = ''
    defaults: RunSettings = RunSettings()

    def __init__(self, workers: int = env_config.WORKERS):
        if not self.name:
            raise ValueError(f'name must be set on {self.__class__.__name__}')
        if workers < 1:
            raise ValueError('workers must be positive')
        self.workers = workers
        self._semaphore: asyncio.Semaphore | None = None

    def resolve(self, cfg: ExperimentConfig) -> RunSettings:
        """Overlay the non-empty config fields on the registered defaults."""
        overrides = {
            key: value
            for key, value in cfg.model_dump(exclude={'experiment', 'output_dir', 'overwrite', 'plot'}).items()
            if value is not None and value != {}
        }
        for key in ('depths', 'flow_times', 'spectrum_depths'):
            if key in overrides:
                overrides[key] = tuple(overrides[key])
        if 'observable_params' in overrides:
            overrides['observable_params'] = {**self.defaults.observable_params, **overrides['observable_params']}
        return RunSettings.model_validate({**self.defaults.model_dump(), **overrides})

    def target(self, cfg: ExperimentConfig) -> Path:
        if cfg.output_dir is not None:
            return cfg.output_dir
        return env_config.OUTPUT_DIR / f'{self.name}-seed{cfg.seed}'

    async def _in_thread(self, func: Callable[..., Any], *args: Any, **kwargs: Any) -> Any:
        if self._semaphore is None:
            self._semaphore = asyncio.Semaphore(self.workers)
        async with self._semaphore:
            return await asyncio.to_thread(func, *args, **kwargs)

    async def error_curve(
        self,
        y_train: TrajectoryBuffer,
        y_test: TrajectoryBuffer,
        depths: Sequence[int],
        steps: int = 1,
    ) -> ErrorCurve:
        """Depth grid split into interleaved chunks evaluated in worker threads."""
        order = np.argsort(depths, kind='stable')
        chunks = [[depths[i] for i in order[k :: self.workers]] for k in range(self.workers)]
        chunks = [chunk for chunk in chunks if chunk]
        curves = await asyncio.gather(
            *(self._in_thread(error_curve, y_train, y_test, chunk, steps) for chunk in chunks)
        )
        merged = ErrorCurve.concat(list(curves))
        # back to the configured order
        position = {d: i for i, d in enumerate(merged.depths)}
        index = [position[d] for d in depths]
        return ErrorCurve(
            depths=tuple(depths),
            mse=merged.mse[index],
            steps=steps,
            objectives=merged.objectives[index],
            degenerate=tuple(merged.degenerate[i] for i in index),
        )

    @abstractmethod
    async def _compute(self, settings: RunSettings) -> T:
        """
        Produce the experiment's result.
        Must be implemented in subclasses.
        """
        pass

    @abstractmethod
    def _write(self, result: T, settings: RunSettings, directory: Path) -> list[Path]:
        """Write the CSV files of a result; returns the written paths."""
        pass

    @abstractmethod
    def simulate(self, settings: RunSettings, length: int, seed: int) -> TrajectoryBuffer:
        """Observed series of the experiment's system and observable."""
        pass

    def _plot(self, result: T, settings: RunSettings, directory: Path) -> list[Path]:
        return []

    def _summary(self, result: T, settings: RunSettings) -> dict[str, Any]:
        return {}

    async def run(self, cfg: ExperimentConfig) -> Path:
        """
        Run the experiment and write its outputs into a fresh run directory.

        Args:
            cfg: Experiment configuration; unset fields take this experiment's defaults

        Returns:
            Path of the run directory
        """
        if cfg.experiment != self.name:
            raise InvalidInputError(f'config is for {cfg.experiment!r}, not {self.name!r}')
        settings = self.resolve(cfg)
        target = self.target(cfg)
        self._semaphore = None
        logger.info('Experiment started', context={'experiment': self.name, 'settings': settings.model_dump()})

        with RunDirectory(target, overwrite=cfg.overwrite) as run_dir:
            result = await self._compute(settings)
            files = self._write(result, settings, run_dir.path)
            if cfg.plot:
                files += self._plot(result, settings, run_dir.path)
            manifest = {
                'experiment': self.name,
                'description': self.description,
                'settings': settings.model_dump(mode='json'),
                'defaults': self.defaults.model_dump(mode='json'),
                'summary': self._summary(result, settings),
                'files': sorted(path.name for path in files),
            }
            write_json(run_dir.path / 'manifest.json', manifest)

        logger.info('Experiment finished', context={'experiment': self.name, 'path': str(target)})
        return target
