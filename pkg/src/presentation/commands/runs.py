"""experiment and oracle: registered experiment runs and oracle property suites."""

import argparse
from argparse import Namespace

from src.core.config import ExperimentConfig
from src.core.logger import get_logger
from src.integrations.files import write_json
from src.presentation.commands.common import float_list, int_list, output_path, seed_of
from src.services.experiments import EXPERIMENTS, run_experiment
from src.services.oracle_checks import SUITES, run_suite

logger = get_logger(__name__)

CONFIG_FLAGS = (
    'm',
    'N',
    'depths',
    'd_autocorr',
    'n_max',
    'flow_time',
    'flow_times',
    'horizon',
    'rk4_step',
    'spectrum_depths',
)


async def experiment_cmd(args: Namespace) -> None:
    overrides = {key: getattr(args, key) for key in CONFIG_FLAGS}
    cfg = ExperimentConfig.load(
        args.config,
        experiment=args.name,
        seed=args.seed,
        output_dir=args.out,
        overwrite=args.overwrite or None,
        plot=args.plot or None,
        **overrides,
    )
    path = await run_experiment(cfg)
    logger.info('Experiment outputs written', context={'path': str(path)})


async def oracle_cmd(args: Namespace) -> None:
    report = run_suite(args.subcheck, args.N, seed_of(args), trials=args.trials)
    path = write_json(output_path(args, f'oracle-{args.subcheck}-N{args.N}-seed{seed_of(args)}.json'), report)
    logger.info('Oracle report written', context={'path': str(path), 'passed': report.passed})


def register(subparsers: argparse._SubParsersAction, common: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser('experiment', parents=[common], help='run a registered experiment')
    parser.add_argument('name', choices=sorted(EXPERIMENTS))
    parser.add_argument('--m', type=int, help='training length')
    parser.add_argument('--N', type=int, help='ensemble size and number of testing windows')
    parser.add_argument('--depths', type=int_list, help='depth grid, e.g. 1:41 or 64,250')
    parser.add_argument('--d-autocorr', type=int)
    parser.add_argument('--n-max', type=int)
    parser.add_argument('--flow-time', type=float)
    parser.add_argument('--flow-times', type=float_list)
    parser.add_argument('--horizon', type=float)
    parser.add_argument('--rk4-step', type=float)
    parser.add_argument('--spectrum-depths', type=int_list)
    parser.add_argument('--overwrite', action='store_true', help='replace an existing run directory')
    parser.add_argument('--plot', action='store_true', help='also write SVG figures')
    parser.set_defaults(handler=experiment_cmd)

    parser = subparsers.add_parser('oracle', parents=[common], help='run an oracle property suite')
    parser.add_argument('subcheck', choices=sorted(SUITES))
    parser.add_argument('--N', type=int, default=16, help='number of atoms')
    parser.add_argument('--trials', type=int, default=100)
    parser.set_defaults(handler=oracle_cmd)
