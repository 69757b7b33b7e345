"""
Experiments on the discrete-time systems: torus rotation, affine twist and odometer.

Each run fits filters on one training orbit, slides them along an independent testing orbit,
compares autocorrelations on a snippet ensemble and optionally stores spectra of U_d.
"""

import asyncio
from abc import abstractmethod
from pathlib import Path
from typing import Any

from src.diagnostics import autocorr_protocol, dyadic_alignment
from src.dynamics import SystemSpec, affine_twist, odometer, sample_initials, torus_rotation, trajectory
from src.filter import TrajectoryBuffer, fit, spectrum
from src.integrations.files import write_autocorr, write_error_curves, write_spectrum
from src.observables import ObservableSpec, observe
from src.observables.catalog import odometer_observable, torus_box, torus_smooth, twist_observable
from src.services.experiments.base import ENSEMBLE_STREAM, TEST_STREAM, TRAIN_STREAM, BaseExperiment
from src.services.experiments.models import ErgodicResult, RunSettings

ALIGNMENT_TOLERANCE = 0.05


def dyadic_roots(d: int) -> int:
    """Smallest power of two >= d."""
    return 1 << (d - 1).bit_length()


class ErgodicExperiment(BaseExperiment[ErgodicResult]):
    @abstractmethod
    def system(self, settings: RunSettings) -> SystemSpec:
        pass

    @abstractmethod
    def observable(self, settings: RunSettings) -> ObservableSpec:
        pass

    def _observed_orbit(
        self,
        sys: SystemSpec,
        obs: ObservableSpec,
        length: int,
        seed: int,
    ) -> TrajectoryBuffer:
        x0 = sample_initials(sys, 1, seed)[0]
        return observe(obs, trajectory(sys, x0, length), system=sys, seed=seed)

    def simulate(self, settings: RunSettings, length: int, seed: int) -> TrajectoryBuffer:
        return self._observed_orbit(self.system(settings), self.observable(settings), length, seed)

    async def _compute(self, settings: RunSettings) -> ErgodicResult:
        sys = self.system(settings)
        obs = self.observable(settings)
        seed = settings.seed
        # N testing windows at the deepest filter
        test_length = settings.N + max(settings.depths)

        y_train, y_test = await asyncio.gather(
            self._in_thread(self._observed_orbit, sys, obs, settings.m, seed + TRAIN_STREAM),
            self._in_thread(self._observed_orbit, sys, obs, test_length, seed + TEST_STREAM),
        )
        model = await self._in_thread(fit, y_train, settings.d_autocorr)

        curve, autocorr, *spectra = await asyncio.gather(
            self.error_curve(y_train, y_test, settings.depths),
            self._in_thread(autocorr_protocol, sys, obs, model, settings.N, settings.n_max, seed + ENSEMBLE_STREAM),
            *(self._in_thread(lambda d: spectrum(fit(y_train, d)), d) for d in settings.spectrum_depths),
        )
        return ErgodicResult(
            curve=curve,
            autocorr=autocorr,
            autocorr_model=model,
            spectra=dict(zip(settings.spectrum_depths, spectra, strict=True)),
        )

    def _write(self, result: ErgodicResult, settings: RunSettings, directory: Path) -> list[Path]:
        files = [
            write_error_curves(directory / 'error_curve.csv', [result.curve]),
            write_autocorr(directory / 'autocorr.csv', result.autocorr),
        ]
        for d, values in result.spectra.items():
            files.append(write_spectrum(directory / f'spectrum_d{d}.csv', values))
        return files

    def _plot(self, result: ErgodicResult, settings: RunSettings, directory: Path) -> list[Path]:
        from src.integrations.files import plots

        files = [
            plots.plot_error_curves(directory / 'error_curve.svg', [result.curve], [self.name]),
            plots.plot_autocorr(directory / 'autocorr.svg', result.autocorr),
        ]
        for d, values in result.spectra.items():
            files.append(plots.plot_spectrum(directory / f'spectrum_d{d}.svg', values, roots=dyadic_roots(d)))
        return files

    def _summary(self, result: ErgodicResult, settings: RunSettings) -> dict[str, Any]:
        curve = result.curve
        return {
            'best_mse': float(curve.mse.min()),
            'degenerate_depths': [d for d, flag in zip(curve.depths, curve.degenerate, strict=True) if flag],
            'max_eigenvalue_modulus': {str(d): values.max_modulus for d, values in result.spectra.items()},
        }


class TorusF1Experiment(ErgodicExperiment):
    name = 'torus-f1'
    description = 'Irrational torus rotation, smooth observable exp(sin(4 pi x1) + cos(6 pi x2))'
    defaults = RunSettings(d_autocorr=21, n_max=63)

    def system(self, settings: RunSettings) -> SystemSpec:
        return torus_rotation()

    def observable(self, settings: RunSettings) -> ObservableSpec:
        return torus_smooth()


class TorusF2Experiment(TorusF1Experiment):
    name = 'torus-f2'
    description = 'Irrational torus rotation, indicator of [0, 1/2) x [1/2, 1)'

    def observable(self, settings: RunSettings) -> ObservableSpec:
        return torus_box()


class TwistExperiment(ErgodicExperiment):
    name = 'twist'
    description = 'Affine twist (x1 + alpha, x1 + x2), mixed spectrum observable exp(2 sin(4 pi x1) + b cos(6 pi x2))'
    defaults = RunSettings(depths=tuple(range(1, 101)), d_autocorr=21, n_max=63, observable_params={'b': 1.0})

    def system(self, settings: RunSettings) -> SystemSpec:
        return affine_twist()

    def observable(self, settings: RunSettings) -> ObservableSpec:
        return twist_observable(b=settings.observable_params['b'])


class TwistWeakExperiment(TwistExperiment):
    name = 'twist-weak'
    description = 'Affine twist with the weakly coupled observable, b = 0.01'
    defaults = TwistExperiment.defaults.model_copy(update={'observable_params': {'b': 0.01}})


class TwistX1Experiment(TwistExperiment):
    name = 'twist-x1'
    description = 'Affine twist with an observable of the rotation factor only, b = 0'
    defaults = TwistExperiment.defaults.model_copy(update={'observable_params': {'b': 0.0}})


class OdometerExperiment(ErgodicExperiment):
    name = 'odometer'
    description = 'Von Neumann-Kakutani odometer, observable exp(sin(6 pi x))'
    defaults = RunSettings(N=100_000, d_autocorr=51, n_max=102)

    def system(self, settings: RunSettings) -> SystemSpec:
        return odometer()

    def observable(self, settings: RunSettings) -> ObservableSpec:
        return odometer_observable()


class OdometerSpectrumExperiment(OdometerExperiment):
    name = 'odometer-spectrum'
    description = 'Eigenvalues of U_d for the odometer against the dyadic points exp(2 pi i k / 2^j)'
    defaults = RunSettings(depths=(64, 250), d_autocorr=64, n_max=128, spectrum_depths=(64, 250))

    def _summary(self, result: ErgodicResult, settings: RunSettings) -> dict[str, Any]:
        summary = super()._summary(result, settings)
        summary['dyadic_alignment'] = {
            str(d): dyadic_alignment(values.values, dyadic_roots(d), ALIGNMENT_TOLERANCE)
            for d, values in result.spectra.items()
        }
        return summary
