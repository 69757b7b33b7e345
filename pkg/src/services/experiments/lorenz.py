"""
Lorenz-63 experiments.

Filters at several flow times t are trained on subsamples of one trajectory of the finest
flow map and compared at a common prediction horizon, errors being plotted against d * t.
"""

import asyncio
import math
from abc import abstractmethod
from pathlib import Path
from typing import Any

import numpy as np

from src.core.exceptions import InvalidInputError
from src.diagnostics import autocorr_protocol
from src.dynamics import Lorenz63, lorenz63, sample_initials, subsample_flow, trajectory
from src.filter import TrajectoryBuffer, fit
from src.integrations.files import write_autocorr, write_error_curves
from src.observables import ObservableSpec, observe
from src.observables.catalog import lorenz_bump, lorenz_x1
from src.services.experiments.base import ENSEMBLE_STREAM, TEST_STREAM, TRAIN_STREAM, BaseExperiment
from src.services.experiments.models import FlowTimeCurve, LorenzResult, RunSettings

MULTIPLE_TOL = 1e-9
# d * t = 0.4, 0.8, ..., 10 at the base flow time 0.05
LORENZ_DEPTHS = tuple(range(8, 201, 8))


def _multiple(value: float, unit: float, what: str) -> int:
    ratio = round(value / unit)
    if ratio < 1 or not math.isclose(ratio * unit, value, rel_tol=MULTIPLE_TOL):
        raise InvalidInputError(f'{what} {value} is not a positive multiple of the flow time {unit}')
    return ratio


def scaled_depths(depths: tuple[int, ...], stride: int) -> tuple[int, ...]:
    """Depths at the base flow time mapped to flow time stride * base, keeping d * t."""
    scaled = sorted({max(1, round(d / stride)) for d in depths})
    return tuple(scaled)


class LorenzExperiment(BaseExperiment[LorenzResult]):
    @abstractmethod
    def observable(self, sys: Lorenz63, settings: RunSettings) -> ObservableSpec:
        pass

    def _base_orbit(self, sys: Lorenz63, length: int, seed: int) -> np.ndarray:
        x0 = sample_initials(sys, 1, seed)[0]
        return trajectory(sys, x0, length)

    def _observed(
        self,
        sys: Lorenz63,
        obs: ObservableSpec,
        points: np.ndarray,
        stride: int,
        length: int,
        seed: int,
    ) -> TrajectoryBuffer:
        coarse, samples = subsample_flow(sys, points, stride)
        if samples.shape[0] < length:
            raise InvalidInputError(f'base trajectory yields {samples.shape[0]} samples, {length} needed')
        return observe(obs, samples[:length], system=coarse, seed=seed)

    def simulate(self, settings: RunSettings, length: int, seed: int) -> TrajectoryBuffer:
        sys = lorenz63(flow_time=settings.flow_time, rk4_step=settings.rk4_step)
        return observe(self.observable(sys, settings), self._base_orbit(sys, length, seed), system=sys, seed=seed)

    async def _compute(self, settings: RunSettings) -> LorenzResult:
        sys = lorenz63(flow_time=settings.flow_time, rk4_step=settings.rk4_step)
        obs = self.observable(sys, settings)
        seed = settings.seed
        horizon = settings.horizon or settings.flow_time

        flow_times = settings.flow_times or (settings.flow_time,)
        strides = [_multiple(t, settings.flow_time, 'flow time') for t in flow_times]
        steps = [_multiple(horizon, t, 'horizon') for t in flow_times]
        depths = [scaled_depths(settings.depths, stride) for stride in strides]
        test_lengths = [settings.N + max(ds) + k - 1 for ds, k in zip(depths, steps, strict=True)]

        train_base, test_base = await asyncio.gather(
            self._in_thread(self._base_orbit, sys, (settings.m - 1) * max(strides) + 1, seed + TRAIN_STREAM),
            self._in_thread(
                self._base_orbit,
                sys,
                max((length - 1) * stride + 1 for length, stride in zip(test_lengths, strides, strict=True)),
                seed + TEST_STREAM,
            ),
        )

        curves = []
        for t, stride, k, ds, length in zip(flow_times, strides, steps, depths, test_lengths, strict=True):
            y_train = self._observed(sys, obs, train_base, stride, settings.m, seed + TRAIN_STREAM)
            y_test = self._observed(sys, obs, test_base, stride, length, seed + TEST_STREAM)
            curve = await self.error_curve(y_train, y_test, ds, k)
            curves.append(FlowTimeCurve(flow_time=t, curve=curve))

        y_base = self._observed(sys, obs, train_base, 1, settings.m, seed + TRAIN_STREAM)
        model = await self._in_thread(fit, y_base, settings.d_autocorr)
        autocorr = await self._in_thread(
            autocorr_protocol, sys, obs, model, settings.N, settings.n_max, seed + ENSEMBLE_STREAM
        )
        return LorenzResult(curves=tuple(curves), autocorr=autocorr, autocorr_model=model)

    def _write(self, result: LorenzResult, settings: RunSettings, directory: Path) -> list[Path]:
        return [
            write_error_curves(directory / 'error_curve.csv', [item.curve for item in result.curves]),
            write_autocorr(directory / 'autocorr.csv', result.autocorr),
        ]

    def _plot(self, result: LorenzResult, settings: RunSettings, directory: Path) -> list[Path]:
        from src.integrations.files import plots

        return [
            plots.plot_error_curves(
                directory / 'error_curve.svg',
                [item.curve for item in result.curves],
                [f't = {item.flow_time}' for item in result.curves],
                abscissa_scale=[item.flow_time for item in result.curves],
            ),
            plots.plot_autocorr(directory / 'autocorr.svg', result.autocorr),
        ]

    def _summary(self, result: LorenzResult, settings: RunSettings) -> dict[str, Any]:
        return {
            'flow_times': {
                str(item.flow_time): {'steps': item.curve.steps, 'depths': list(item.curve.depths)}
                for item in result.curves
            },
            'saturated_mse': {str(item.flow_time): float(np.mean(item.curve.mse[-3:])) for item in result.curves},
        }


class LorenzX1Experiment(LorenzExperiment):
    name = 'lorenz-x1'
    description = 'Lorenz-63, observable x1, multistep errors at horizon 0.4 for flow times 0.05 to 0.4'
    defaults = RunSettings(
        m=20_000,
        N=10_000,
        depths=LORENZ_DEPTHS,
        d_autocorr=21,
        n_max=80,
        flow_times=(0.05, 0.1, 0.2, 0.4),
        horizon=0.4,
    )

    def observable(self, sys: Lorenz63, settings: RunSettings) -> ObservableSpec:
        return lorenz_x1()


class LorenzBumpExperiment(LorenzExperiment):
    name = 'lorenz-bump'
    description = 'Lorenz-63, Gaussian bump of width delta / 3 at the equilibrium x+'
    defaults = RunSettings(m=20_000, N=10_000, depths=LORENZ_DEPTHS, d_autocorr=21, n_max=80)

    def observable(self, sys: Lorenz63, settings: RunSettings) -> ObservableSpec:
        return lorenz_bump(sys)
