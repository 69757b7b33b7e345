import logging
import sys
from functools import cache
from logging.handlers import RotatingFileHandler
from typing import Any

import numpy as np
import structlog

from src.core.config import env_config


def _handlers(level: int | str) -> list[logging.Handler]:
    # logs go to stderr; results only go to files
    handlers: list[logging.Handler] = [logging.StreamHandler(sys.stderr)]

    if env_config.LOG_TO_FILE:
        handlers.append(
            RotatingFileHandler(
                env_config.LOGS_DIR / f'{env_config.APP_NAME}.log',
                maxBytes=10 * 1024 * 1024,
                backupCount=5,
                encoding='utf-8',
            )
        )

    for handler in handlers:
        handler.setLevel(level)
    return handlers


@cache
def configure_logging(level: int | str = env_config.LOG_LEVEL) -> None:
    """Set up stdlib handlers and the structlog pipeline. Runs once per level."""
    logging.basicConfig(format='%(message)s', handlers=_handlers(level), level=level, force=True)

    renderer = structlog.dev.ConsoleRenderer() if env_config.DEBUG else structlog.processors.JSONRenderer()
    structlog.configure(
        processors=[
            structlog.stdlib.add_log_level,
            structlog.stdlib.add_logger_name,
            structlog.processors.TimeStamper(fmt=env_config.LOG_DATE_FORMAT, utc=True),
            structlog.processors.CallsiteParameterAdder(
                parameters=[
                    structlog.processors.CallsiteParameter.MODULE,
                    structlog.processors.CallsiteParameter.FUNC_NAME,
                    structlog.processors.CallsiteParameter.LINENO,
                ]
            ),
            structlog.processors.StackInfoRenderer(),
            structlog.processors.format_exc_info,
            numpy_to_builtin,
            renderer,
        ],
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        wrapper_class=structlog.stdlib.BoundLogger,
        cache_logger_on_first_use=True,
    )


def get_logger(name: str) -> structlog.BoundLogger:
    configure_logging()
    return structlog.get_logger(name)


def numpy_to_builtin(_logger: structlog.BoundLogger, _method_name: str, event_dict: dict[str, Any]) -> Any:
    """Recursively turn numpy values into JSON-renderable builtins"""

    def _convert(data: Any) -> Any:
        if isinstance(data, dict):
            return {key: _convert(value) for key, value in data.items()}
        if isinstance(data, list | tuple):
            return [_convert(item) for item in data]
        if isinstance(data, np.ndarray):
            return _convert(data.tolist())
        if isinstance(data, np.generic):
            return _convert(data.item())
        if isinstance(data, complex):
            return {'re': data.real, 'im': data.imag}
        return data

    return {key: _convert(value) for key, value in event_dict.items()}
