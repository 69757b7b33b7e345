import asyncio
from itertools import pairwise

import numpy as np
import pytest

from src.core.config import ExperimentConfig, env_config
from src.core.exceptions import InvalidInputError
from src.diagnostics import dyadic_alignment, error_curve
from src.filter import fit, spectrum
from src.services.experiments import EXPERIMENTS, get_experiment, run_experiment
from src.services.experiments.ergodic import dyadic_roots
from src.services.experiments.lorenz import LORENZ_DEPTHS, _multiple, scaled_depths
from src.services.experiments.models import ErgodicResult


def test_registered_experiments():
    assert set(EXPERIMENTS) == {
        'torus-f1',
        'torus-f2',
        'twist',
        'twist-weak',
        'twist-x1',
        'odometer',
        'odometer-spectrum',
        'lorenz-x1',
        'lorenz-bump',
    }
    with pytest.raises(InvalidInputError):
        get_experiment('no-such-experiment')


def test_defaults_follow_the_experiment():
    assert get_experiment('torus-f1').defaults.depths == tuple(range(1, 41))
    assert get_experiment('odometer').defaults.N == 100_000
    assert get_experiment('odometer').defaults.d_autocorr == 51
    assert get_experiment('odometer-spectrum').defaults.spectrum_depths == (64, 250)
    assert get_experiment('lorenz-x1').defaults.flow_times == (0.05, 0.1, 0.2, 0.4)
    assert get_experiment('lorenz-bump').defaults.n_max == 80


def test_resolve_overlays_config():
    experiment = get_experiment('twist-weak')
    settings = experiment.resolve(ExperimentConfig(experiment='twist-weak', m=100, depths=[5, 3]))

    assert settings.m == 100
    assert settings.depths == (5, 3)
    assert settings.N == 10_000
    assert settings.observable_params == {'b': 0.01}

    merged = experiment.resolve(ExperimentConfig(experiment='twist-weak', observable_params={'b': 0.5}))
    assert merged.observable_params == {'b': 0.5}


def test_default_target():
    experiment = get_experiment('torus-f1')
    target = experiment.target(ExperimentConfig(experiment='torus-f1', seed=3))
    assert target == env_config.OUTPUT_DIR / 'torus-f1-seed3'


def test_config_is_not_read_from_environment(monkeypatch):
    monkeypatch.setenv('M', '5')
    monkeypatch.setenv('m', '5')
    assert ExperimentConfig.load(experiment='torus-f1', N=None).m is None


def test_run_rejects_foreign_config(tmp_path):
    cfg = ExperimentConfig(experiment='torus-f2', output_dir=tmp_path / 'run')
    with pytest.raises(InvalidInputError):
        asyncio.run(get_experiment('torus-f1').run(cfg))


def test_error_curve_keeps_configured_order(torus_buffers):
    train, test = torus_buffers
    experiment = get_experiment('torus-f1', workers=2)
    curve = asyncio.run(experiment.error_curve(train, test, [3, 1, 2]))
    direct = error_curve(train, test, [3, 1, 2])

    assert curve.depths == (3, 1, 2)
    np.testing.assert_array_equal(curve.mse, direct.mse)


def test_small_torus_run(tmp_path):
    cfg = ExperimentConfig(
        experiment='torus-f1',
        m=2000,
        N=500,
        depths=[1, 2, 3],
        d_autocorr=2,
        n_max=5,
        output_dir=tmp_path / 'run',
        plot=True,
    )
    path = asyncio.run(run_experiment(cfg))

    names = sorted(p.name for p in path.iterdir())
    assert names == ['autocorr.csv', 'autocorr.svg', 'error_curve.csv', 'error_curve.svg', 'manifest.json']


def test_compute_returns_typed_result():
    experiment = get_experiment('torus-f1')
    settings = experiment.resolve(ExperimentConfig(experiment='torus-f1', m=1500, N=300, depths=[1, 2], n_max=4))
    result = asyncio.run(experiment._compute(settings))

    assert isinstance(result, ErgodicResult)
    assert result.curve.depths == (1, 2)
    assert result.autocorr.n_max == 4


@pytest.mark.parametrize('d', [64, 250])
def test_odometer_fits_stay_in_unit_disk(d):
    experiment = get_experiment('odometer-spectrum')
    settings = experiment.defaults
    train = experiment.simulate(settings, settings.m, 0)

    assert spectrum(fit(train, d)).max_modulus <= 1.0 + 1e-4


def test_dyadic_roots():
    assert dyadic_roots(1) == 1
    assert dyadic_roots(64) == 64
    assert dyadic_roots(250) == 256


def test_lorenz_depth_scaling():
    assert scaled_depths(LORENZ_DEPTHS, 1) == LORENZ_DEPTHS
    assert scaled_depths(LORENZ_DEPTHS, 2) == tuple(range(4, 101, 4))
    assert scaled_depths(LORENZ_DEPTHS, 8) == tuple(range(1, 26))
    assert _multiple(0.4, 0.05, 'horizon') == 8
    with pytest.raises(InvalidInputError):
        _multiple(0.07, 0.05, 'flow time')


@pytest.mark.slow
def test_twist_saturates_and_rotation_factor_decays():
    depths = [1, 50, 100]
    curves = {}
    for name in ('twist', 'twist-x1'):
        experiment = get_experiment(name)
        settings = experiment.defaults
        train = experiment.simulate(settings, settings.m, 0)
        test = experiment.simulate(settings, settings.N + max(depths), 1)
        curves[name] = error_curve(train, test, depths).mse

    mixed = curves['twist']
    assert abs(mixed[2] - mixed[1]) <= 0.25 * mixed[1]
    assert mixed[2] >= 1e-6

    rotation = curves['twist-x1']
    assert rotation[2] <= 1e-2 * rotation[0]


@pytest.mark.slow
def test_odometer_spectrum_is_dyadic():
    experiment = get_experiment('odometer-spectrum')
    settings = experiment.defaults
    train = experiment.simulate(settings, settings.m, 0)
    values = spectrum(fit(train, 64)).values

    assert values.size == 64
    assert dyadic_alignment(values, 64, 0.05) >= 0.8


@pytest.mark.slow
def test_lorenz_saturation_ordering():
    experiment = get_experiment('lorenz-x1')
    result = asyncio.run(experiment._compute(experiment.defaults))

    saturated = [float(np.mean(item.curve.mse[-3:])) for item in result.curves]
    assert [item.flow_time for item in result.curves] == [0.05, 0.1, 0.2, 0.4]
    assert all(a <= b for a, b in pairwise(saturated))

    finest = result.curves[0].curve
    dt = np.asarray(finest.depths) * 0.05
    window = (dt >= 4.0 - 1e-9) & (dt <= 8.0 + 1e-9)
    at_eight = finest.mse[np.isclose(dt, 8.0)][0]
    assert at_eight <= 1.1 * finest.mse[window].min()
