import asyncio
import sys
from collections.abc import Sequence

from src.core.logger import get_logger
from src.presentation.cli import build_parser
from src.presentation.middlewares.logging import CommandLoggingMiddleware

logger = get_logger(__name__)


def main(argv: Sequence[str] | None = None) -> int:
    """Parse arguments, run one command and return its exit code."""
    args = build_parser().parse_args(argv)
    return asyncio.run(CommandLoggingMiddleware().dispatch(args.command, args.handler, args))


def run() -> None:
    sys.exit(main())


if __name__ == '__main__':
    run()
