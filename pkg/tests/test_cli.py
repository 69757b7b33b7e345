import json

import numpy as np
import pytest

from src.filter import FilterModel
from src.integrations.files import read_series, save_model, write_series
from src.main import main

SMALL_RUN = ['--m', '2000', '--N', '500', '--depths', '1:6', '--d-autocorr', '3', '--n-max', '8']


def _model(path, coeffs):
    return save_model(path, FilterModel(d=len(coeffs), coeffs=tuple(coeffs)))


def test_fit_constant_series(tmp_path):
    series = write_series(tmp_path / 'ones.csv', np.ones(12))
    out = tmp_path / 'model.json'

    assert main(['fit', '--input', str(series), '-d', '1', '--out', str(out)]) == 0
    model = json.loads(out.read_text())
    assert model['coeffs'] == pytest.approx([1.0])

    report = json.loads((tmp_path / 'model.report.json').read_text())
    assert report['degenerate_fit'] is False
    assert report['d'] == 1


def test_fit_period_three(tmp_path):
    series = write_series(tmp_path / 'z3.csv', np.tile([1.0, 0.0, 0.0], 8))
    out = tmp_path / 'z3.json'

    assert main(['fit', '--input', str(series), '--d', '3', '--out', str(out)]) == 0
    assert json.loads(out.read_text())['coeffs'] == pytest.approx([0.0, 0.0, 1.0], abs=1e-10)
    assert json.loads((tmp_path / 'z3.report.json').read_text())['degenerate_fit'] is False


def test_fit_needs_enough_rows(tmp_path, capsys):
    series = write_series(tmp_path / 'short.csv', np.ones(4))
    assert main(['fit', '--input', str(series), '-d', '4', '--out', str(tmp_path / 'm.json')]) == 1
    assert 'needs at least 5 rows' in capsys.readouterr().err


def test_fit_missing_input_is_io_error(tmp_path):
    assert main(['fit', '--input', str(tmp_path / 'absent.csv'), '-d', '1', '--out', str(tmp_path / 'm.json')]) == 3


def test_fit_malformed_input(tmp_path):
    bad = tmp_path / 'bad.csv'
    bad.write_text('value\n1\nx\n')
    assert main(['fit', '--input', str(bad), '-d', '1', '--out', str(tmp_path / 'm.json')]) == 1


def test_predict_constant(tmp_path):
    model = _model(tmp_path / 'c1.json', [1.0])
    window = write_series(tmp_path / 'w.csv', np.array([5.0]))
    out = tmp_path / 'p.csv'

    assert main(['predict', '--model', str(model), '--window', str(window), '--steps', '3', '--out', str(out)]) == 0
    assert out.read_text() == 'step,value\n0,5\n1,5\n2,5\n'


def test_predict_period_three(tmp_path):
    model = _model(tmp_path / 'z3.json', [0.0, 0.0, 1.0])
    window = write_series(tmp_path / 'w.csv', np.array([1.0, 0.0, 0.0]))
    out = tmp_path / 'p.csv'

    assert main(['predict', '--model', str(model), '--window', str(window), '--steps', '6', '--out', str(out)]) == 0
    np.testing.assert_array_equal(read_series(out), [1, 0, 0, 1, 0, 0])


def test_predict_zero_steps_writes_header(tmp_path):
    model = _model(tmp_path / 'c1.json', [1.0])
    window = write_series(tmp_path / 'w.csv', np.array([5.0]))
    out = tmp_path / 'p.csv'

    assert main(['predict', '--model', str(model), '--window', str(window), '--steps', '0', '--out', str(out)]) == 0
    assert out.read_text() == 'step,value\n'


def test_predict_window_mismatch(tmp_path):
    model = _model(tmp_path / 'z3.json', [0.0, 0.0, 1.0])
    window = write_series(tmp_path / 'w.csv', np.array([1.0, 0.0]))
    args = ['predict', '--model', str(model), '--window', str(window), '--steps', '2', '--out', str(tmp_path / 'p.csv')]
    assert main(args) == 1


def test_spectrum_command(tmp_path):
    model = _model(tmp_path / 'z3.json', [0.0, 0.0, 1.0])
    out = tmp_path / 'spectrum.csv'

    assert main(['spectrum', '--model', str(model), '--out', str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == 're,im,residual'
    assert len(lines) == 4


def test_autocorr_command(tmp_path):
    model = _model(tmp_path / 'z3.json', [0.0, 0.0, 1.0])
    series = write_series(tmp_path / 'z3.csv', np.tile([1.0, 0.0, 0.0], 10))
    out = tmp_path / 'autocorr.csv'

    assert main(['autocorr', '--input', str(series), '--model', str(model), '--n-max', '5', '--out', str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == 'lag,a_true,a_filter'
    assert len(lines) == 7


def test_simulate_command(tmp_path):
    out = tmp_path / 'torus.csv'
    assert main(['simulate', 'torus-f1', '--length', '100', '--seed', '3', '--out', str(out)]) == 0
    assert read_series(out).size == 100


def test_oracle_command(tmp_path):
    out = tmp_path / 'moments.json'
    assert main(['oracle', 'moment-identity', '--N', '12', '--out', str(out)]) == 0
    report = json.loads(out.read_text())
    assert report['passed'] is True
    assert report['N'] == 12


def test_unknown_subcommand_choice_is_usage_error():
    with pytest.raises(SystemExit) as e:
        main(['experiment', 'no-such-experiment'])
    assert e.value.code == 1


def test_experiment_is_deterministic(tmp_path):
    first, second = tmp_path / 'first', tmp_path / 'second'
    assert main(['experiment', 'torus-f1', *SMALL_RUN, '--out', str(first)]) == 0
    assert main(['experiment', 'torus-f1', *SMALL_RUN, '--out', str(second)]) == 0

    for name in ('error_curve.csv', 'autocorr.csv', 'manifest.json'):
        assert (first / name).read_bytes() == (second / name).read_bytes()

    lines = (first / 'error_curve.csv').read_text().splitlines()
    assert lines[0] == 'd,steps,mse'
    assert [line.split(',')[0] for line in lines[1:]] == ['1', '2', '3', '4', '5']

    manifest = json.loads((first / 'manifest.json').read_text())
    assert manifest['experiment'] == 'torus-f1'
    assert manifest['settings']['m'] == 2000
    assert manifest['defaults']['m'] == 10_000


def test_experiment_refuses_existing_directory(tmp_path):
    out = tmp_path / 'run'
    out.mkdir()
    assert main(['experiment', 'torus-f1', *SMALL_RUN, '--out', str(out)]) == 3
    assert main(['experiment', 'torus-f1', *SMALL_RUN, '--out', str(out), '--overwrite']) == 0
    assert (out / 'error_curve.csv').exists()


def test_experiment_config_file(tmp_path):
    config = tmp_path / 'run.env'
    config.write_text('m = 1500\nN = 400\ndepths = [1, 2, 3]\nd_autocorr = 2\nn_max = 4\n')
    out = tmp_path / 'run'

    assert main(['experiment', 'torus-f2', '--config', str(config), '--m', '1800', '--out', str(out)]) == 0
    settings = json.loads((out / 'manifest.json').read_text())['settings']
    assert settings['m'] == 1800
    assert settings['N'] == 400
    assert settings['depths'] == [1, 2, 3]


def test_experiment_config_rejects_unknown_keys(tmp_path):
    config = tmp_path / 'run.env'
    config.write_text('m = 1500\nwindow = 3\n')
    assert main(['experiment', 'torus-f1', '--config', str(config), '--out', str(tmp_path / 'run')]) == 1
