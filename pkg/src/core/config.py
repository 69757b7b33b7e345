from pathlib import Path
from typing import Any

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, PydanticBaseSettingsSource, SettingsConfigDict


class EnvConfig(BaseSettings):
    model_config = SettingsConfigDict(env_file='.env', env_file_encoding='utf-8', extra='ignore')

    # ----- APP ENV CONFIG -----
    APP_NAME: str = 'koopman-wiener'
    DEBUG: bool = False

    # ----- RUNS -----
    OUTPUT_DIR: Path = Path('runs')
    WORKERS: int = 4

    # ----- LOGGER -----
    LOG_LEVEL: str = 'INFO'
    LOG_TO_FILE: bool = False
    LOG_DATE_FORMAT: str = '%Y-%m-%d %H:%M:%S.%f'

    BASE_DIR: Path = Path(__file__).resolve().parent.parent.parent
    _LOGS_DIR: Path = BASE_DIR / 'logs'

    @property
    def LOGS_DIR(self) -> Path:
        Path.mkdir(self._LOGS_DIR, parents=True, exist_ok=True)
        return self._LOGS_DIR


class ExperimentConfig(BaseSettings):
    """
    Configuration of one experiment run.

    Values come from keyword arguments (CLI flags) and, optionally, a flat
    ``key = value`` file passed as ``_env_file``. The process environment is
    deliberately not a source. Fields left as None are filled from the
    registered experiment's defaults.
    """

    model_config = SettingsConfigDict(extra='forbid', frozen=True, env_file_encoding='utf-8')

    experiment: str
    m: int | None = Field(None, gt=0)
    N: int | None = Field(None, gt=0)
    depths: list[int] | None = None
    d_autocorr: int | None = Field(None, gt=0)
    n_max: int | None = Field(None, gt=0)
    seed: int = 0

    flow_time: float | None = Field(None, gt=0)
    flow_times: list[float] | None = None
    horizon: float | None = Field(None, gt=0)
    rk4_step: float | None = Field(None, gt=0)
    observable_params: dict[str, float] = {}
    spectrum_depths: list[int] | None = None

    output_dir: Path | None = None
    overwrite: bool = False
    plot: bool = False

    @field_validator('depths', 'spectrum_depths')
    @classmethod
    def _positive_counts(cls, value: list[int] | None) -> list[int] | None:
        if value is not None and (not value or min(value) < 1):
            raise ValueError('depth lists must be nonempty and contain positive counts')
        return value

    @field_validator('flow_times')
    @classmethod
    def _positive_times(cls, value: list[float] | None) -> list[float] | None:
        if value is not None and (not value or min(value) <= 0):
            raise ValueError('flow_times must be nonempty and positive')
        return value

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> tuple[PydanticBaseSettingsSource, ...]:
        return init_settings, dotenv_settings

    @classmethod
    def load(cls, config_file: Path | None = None, **overrides: Any) -> 'ExperimentConfig':
        """Build a config from an optional file, CLI overrides taking precedence."""
        values = {key: value for key, value in overrides.items() if value is not None}
        if config_file is None:
            return cls(**values)
        return cls(_env_file=config_file, **values)


env_config = EnvConfig()
