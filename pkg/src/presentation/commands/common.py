import argparse
import sys
from pathlib import Path

from src.core.config import env_config


class CommandParser(argparse.ArgumentParser):
    """Usage errors exit with status 1; 2 is reserved for numerical degeneracy."""

    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        self.exit(1, f'{self.prog}: error: {message}\n')


def global_options(suppress: bool) -> argparse.ArgumentParser:
    """--seed, --out and --config, accepted before and after the subcommand."""
    default = argparse.SUPPRESS if suppress else None
    options = CommandParser(add_help=False)
    options.add_argument('--seed', type=int, default=default, help='integer seed of the PCG64 streams')
    options.add_argument('--out', type=Path, default=default, help='output file, or run directory for experiments')
    options.add_argument('--config', type=Path, default=default, help='flat key = value experiment config file')
    return options


def output_path(args: argparse.Namespace, default_name: str) -> Path:
    if args.out is not None:
        path = args.out
    else:
        path = env_config.OUTPUT_DIR / default_name
    path.parent.mkdir(parents=True, exist_ok=True)
    return path


def seed_of(args: argparse.Namespace) -> int:
    return 0 if args.seed is None else args.seed


def int_list(text: str) -> list[int]:
    """'1,2,5' or '1:41' (range, end exclusive)."""
    try:
        if ':' in text:
            start, stop = text.split(':', 1)
            return list(range(int(start), int(stop)))
        return [int(item) for item in text.split(',') if item.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f'expected integers like 1,2,5 or 1:41, got {text!r}') from e


def float_list(text: str) -> list[float]:
    try:
        return [float(item) for item in text.split(',') if item.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f'expected numbers like 0.05,0.1, got {text!r}') from e
