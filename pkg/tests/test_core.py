import asyncio
from argparse import Namespace
from pathlib import Path

import numpy as np
import pytest
from pydantic import ValidationError

from src.core.config import ExperimentConfig
from src.core.exceptions import InvalidInputError, NumericalDegeneracyError, StorageError, WienerError
from src.core.logger import numpy_to_builtin
from src.filter import FilterModel
from src.presentation.commands.common import float_list, int_list
from src.presentation.middlewares.logging import CommandLoggingMiddleware


def _dispatch(error: Exception | None) -> int:
    async def handler(args: Namespace) -> None:
        if error is not None:
            raise error

    return asyncio.run(CommandLoggingMiddleware().dispatch('fit', handler, Namespace(input=Path('y.csv'))))


async def _invalid_model(args: Namespace) -> None:
    FilterModel(d=0, coeffs=())


def test_exit_codes():
    assert _dispatch(None) == 0
    assert _dispatch(InvalidInputError('bad')) == 1
    assert _dispatch(NumericalDegeneracyError('singular')) == 2
    assert _dispatch(StorageError('disk')) == 3
    assert _dispatch(PermissionError('denied')) == 3
    assert _dispatch(RuntimeError('unexpected')) == 1


def test_validation_errors_are_usage_errors():
    assert asyncio.run(CommandLoggingMiddleware().dispatch('fit', _invalid_model, Namespace())) == 1


def test_failure_message_on_stderr(capsys):
    _dispatch(NumericalDegeneracyError('epsilon is undefined'))
    assert 'error: epsilon is undefined' in capsys.readouterr().err


def test_unexpected_failure_is_marked_internal(capsys):
    assert _dispatch(RuntimeError('boom')) == 1
    assert 'internal error: RuntimeError: boom' in capsys.readouterr().err

    assert _dispatch(InvalidInputError('bad window')) == 1
    err = capsys.readouterr().err
    assert 'error: bad window' in err
    assert 'internal' not in err


def test_context_drops_handler():
    context = CommandLoggingMiddleware.get_context('fit', Namespace(handler=print, command='fit', input=Path('y.csv')))
    assert context['command'] == 'fit'
    assert context['arguments'] == {'input': 'y.csv'}
    assert len(context['trace_id']) == 36


def test_error_hierarchy():
    assert issubclass(InvalidInputError, ValueError)
    assert all(issubclass(e, WienerError) for e in (InvalidInputError, NumericalDegeneracyError, StorageError))


def test_experiment_config_validation():
    with pytest.raises(ValidationError):
        ExperimentConfig(experiment='torus-f1', depths=[0, 1])
    with pytest.raises(ValidationError):
        ExperimentConfig(experiment='torus-f1', flow_times=[])
    with pytest.raises(ValidationError):
        ExperimentConfig(experiment='torus-f1', m=0)
    with pytest.raises(ValidationError):
        ExperimentConfig(experiment='torus-f1', window=3)


def test_experiment_config_load_drops_unset():
    cfg = ExperimentConfig.load(experiment='twist', m=None, N=50)
    assert cfg.m is None
    assert cfg.N == 50
    assert cfg.seed == 0


def test_numpy_values_become_builtins():
    event = numpy_to_builtin(
        None,
        'info',
        {'context': {'drift': np.array([0.5, 1.0]), 'n': np.int64(3), 'z': 1 + 2j, 'pair': (np.float64(0.25),)}},
    )
    assert event == {'context': {'drift': [0.5, 1.0], 'n': 3, 'z': {'re': 1.0, 'im': 2.0}, 'pair': [0.25]}}


def test_list_arguments():
    assert int_list('1:5') == [1, 2, 3, 4]
    assert int_list('64,250') == [64, 250]
    assert float_list('0.05,0.1') == [0.05, 0.1]
