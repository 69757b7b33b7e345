"""simulate, fit, predict, spectrum and autocorr: commands on single series and model files."""

import argparse
from argparse import Namespace
from pathlib import Path

import numpy as np

from src.core.config import ExperimentConfig
from src.core.exceptions import InvalidInputError
from src.core.logger import get_logger
from src.diagnostics import autocorr_from_series
from src.filter import TrajectoryBuffer, fit, predict_iterated, spectrum
from src.integrations.files import (
    load_model,
    read_series,
    report_path,
    save_model,
    write_autocorr,
    write_json,
    write_series,
    write_spectrum,
)
from src.presentation.commands.common import output_path, seed_of
from src.services.experiments import EXPERIMENTS, get_experiment

logger = get_logger(__name__)


async def simulate(args: Namespace) -> None:
    experiment = get_experiment(args.scenario)
    cfg = ExperimentConfig.load(args.config, experiment=args.scenario, seed=args.seed)
    settings = experiment.resolve(cfg)
    y = experiment.simulate(settings, args.length, seed_of(args))
    path = write_series(output_path(args, f'{args.scenario}-seed{seed_of(args)}.csv'), y.values)
    logger.info('Series written', context={'path': str(path), 'length': len(y)})


async def fit_cmd(args: Namespace) -> None:
    values = read_series(args.input)
    if values.size < args.d + 1:
        raise InvalidInputError(f'depth {args.d} needs at least {args.d + 1} rows, {args.input} has {values.size}')
    y = TrajectoryBuffer.from_values(values, observable=args.input.name)
    model = fit(y, args.d, row_start=args.row_start, method=args.method)

    path = save_model(output_path(args, f'model_d{args.d}.json'), model)
    write_json(
        report_path(path),
        {
            'd': model.d,
            'objective': model.objective,
            'degenerate_fit': model.degenerate_fit,
            'final_residual': model.final_residual,
            'rows': len(y) - 1 - model.row_start,
            'max_eigenvalue_modulus': spectrum(model).max_modulus,
        },
    )
    logger.info('Model written', context={'path': str(path), 'objective': model.objective})


async def predict_cmd(args: Namespace) -> None:
    model = load_model(args.model)
    window = read_series(args.window)
    if args.steps < 0:
        raise InvalidInputError(f'steps must be nonnegative, got {args.steps}')
    if window.size != model.d:
        raise InvalidInputError(f'seed window has {window.size} values, the model has depth {model.d}')
    predictions = predict_iterated(model, window, args.steps) if args.steps else np.empty(0)
    write_series(output_path(args, 'predictions.csv'), predictions, index='step')


async def spectrum_cmd(args: Namespace) -> None:
    model = load_model(args.model)
    values = spectrum(model)
    path = write_spectrum(output_path(args, f'spectrum_d{model.d}.csv'), values)
    if args.plot:
        from src.integrations.files import plots

        plots.plot_spectrum(path.with_suffix('.svg'), values)
    logger.info('Spectrum written', context={'path': str(path), 'max_modulus': values.max_modulus})


async def autocorr_cmd(args: Namespace) -> None:
    model = load_model(args.model)
    y = TrajectoryBuffer.from_values(read_series(args.input), observable=args.input.name)
    report = autocorr_from_series(y, model, args.n_max)
    path = write_autocorr(output_path(args, 'autocorr.csv'), report)
    if args.plot:
        from src.integrations.files import plots

        plots.plot_autocorr(path.with_suffix('.svg'), report)


def register(subparsers: argparse._SubParsersAction, common: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser('simulate', parents=[common], help='write an observed series of a scenario')
    parser.add_argument('scenario', choices=sorted(EXPERIMENTS))
    parser.add_argument('--length', type=int, default=10_000)
    parser.set_defaults(handler=simulate)

    parser = subparsers.add_parser('fit', parents=[common], help='fit a filter to a series CSV')
    parser.add_argument('--input', type=Path, required=True)
    parser.add_argument('-d', '--d', type=int, required=True, help='delay depth')
    parser.add_argument('--method', choices=('qr', 'normal'), default='qr')
    parser.add_argument('--row-start', type=int, default=None, help='first row of the common sample window')
    parser.set_defaults(handler=fit_cmd)

    parser = subparsers.add_parser('predict', parents=[common], help='iterate a filter from a seed window')
    parser.add_argument('--model', type=Path, required=True)
    parser.add_argument('--window', type=Path, required=True, help='CSV of the last d values, oldest first')
    parser.add_argument('--steps', type=int, required=True)
    parser.set_defaults(handler=predict_cmd)

    parser = subparsers.add_parser('spectrum', parents=[common], help='eigenvalues of the companion matrix')
    parser.add_argument('--model', type=Path, required=True)
    parser.add_argument('--plot', action='store_true')
    parser.set_defaults(handler=spectrum_cmd)

    parser = subparsers.add_parser('autocorr', parents=[common], help='true and filter autocorrelations')
    parser.add_argument('--input', type=Path, required=True)
    parser.add_argument('--model', type=Path, required=True)
    parser.add_argument('--n-max', type=int, default=63)
    parser.add_argument('--plot', action='store_true')
    parser.set_defaults(handler=autocorr_cmd)
