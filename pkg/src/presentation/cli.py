from src.core.config import env_config
from src.presentation.commands import runs, series
from src.presentation.commands.common import CommandParser, global_options


def build_parser() -> CommandParser:
    parser = CommandParser(
        prog=env_config.APP_NAME,
        description='Least-squares linear filters (Hankel DMD) for observables of measure-preserving systems',
        parents=[global_options(suppress=False)],
    )
    subparsers = parser.add_subparsers(dest='command', required=True, metavar='command')
    common = global_options(suppress=True)
    series.register(subparsers, common)
    runs.register(subparsers, common)
    return parser
