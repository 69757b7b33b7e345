import sys
import time
import uuid
from argparse import Namespace
from collections.abc import Awaitable, Callable
from pathlib import Path
from typing import Any, Literal

from pydantic import ValidationError
from pydantic_settings import SettingsError

from src.core.config import env_config
from src.core.exceptions import WienerError
from src.core.logger import get_logger

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 3


class CommandLoggingMiddleware:
    """
    Middleware for logging CLI commands.
    Logs the command, its arguments and execution time, and turns exceptions into exit codes.
    """

    async def dispatch(self, command: str, handler: Callable[[Namespace], Awaitable[None]], args: Namespace) -> int:
        context = self.get_context(command, args)
        await logger.ainfo(f'Command started {command}', context=context)

        start_time = time.perf_counter()

        try:
            await handler(args)
        except WienerError as e:
            return await self.create_final_log('failed', command, context, start_time, e.exit_code, e)

        except (ValidationError, SettingsError) as e:
            return await self.create_final_log('failed', command, context, start_time, EXIT_USAGE, e)

        except OSError as e:
            return await self.create_final_log('failed', command, context, start_time, EXIT_IO, e)

        except Exception as e:
            # exit code stays 1; the marker separates crashes from input errors
            context['internal_error'] = True
            return await self.create_final_log('failed', command, context, start_time, EXIT_USAGE, e)

        else:
            return await self.create_final_log('successful', command, context, start_time, EXIT_OK)

    @staticmethod
    async def create_final_log(  # noqa: PLR0913
        msg: Literal['successful', 'failed'],
        command: str,
        context: dict,
        start_time: float,
        exit_code: int,
        e: Exception | None = None,
    ) -> int:
        process_time = time.perf_counter() - start_time
        context['process_time'] = f'{process_time:.4f}'
        context['exit_code'] = exit_code

        if msg == 'successful':
            await logger.ainfo(f'Command completed {command}', context=context)
        elif context.get('internal_error'):
            await logger.aexception(f'Command crashed {command}', context=context, exc_info=e)
            sys.stderr.write(f'{env_config.APP_NAME}: internal error: {e.__class__.__name__}: {e}\n')
        else:
            await logger.aerror(f'Command failed {command}', context=context, exc_info=e)
            sys.stderr.write(f'{env_config.APP_NAME}: error: {e}\n')
        return exit_code

    @staticmethod
    def get_context(command: str, args: Namespace) -> dict[str, Any]:
        arguments = {
            key: str(value) if isinstance(value, Path) else value
            for key, value in vars(args).items()
            if key not in ('handler', 'command')
        }
        return {'trace_id': str(uuid.uuid4()), 'command': command, 'arguments': arguments}
