import os
import shutil
import tempfile
from pathlib import Path
from types import TracebackType

from src.core.exceptions import StorageError
from src.core.logger import get_logger

logger = get_logger(__name__)


class RunDirectory:
    """
    Output directory of one run, populated in a temporary sibling and renamed into place on
    success. An existing run is replaced only when overwrite is set.
    """

    def __init__(self, target: Path, overwrite: bool = False):
        self.target = target
        self.overwrite = overwrite
        self._staging: Path | None = None

    @property
    def path(self) -> Path:
        if self._staging is None:
            raise StorageError('run directory is not open')
        return self._staging

    def __enter__(self) -> 'RunDirectory':
        if self.target.exists() and not self.overwrite:
            raise StorageError(f'{self.target} already exists, pass --overwrite to replace it')
        try:
            self.target.parent.mkdir(parents=True, exist_ok=True)
            self._staging = Path(tempfile.mkdtemp(prefix=f'.{self.target.name}.', dir=self.target.parent))
        except OSError as e:
            raise StorageError(f'cannot create a run directory next to {self.target}: {e.strerror}') from e
        return self

    def __exit__(
        self,
        exc_type: type[BaseException] | None,
        exc: BaseException | None,
        tb: TracebackType | None,
    ) -> None:
        staging, self._staging = self._staging, None
        if staging is None:
            return
        if exc_type is not None:
            shutil.rmtree(staging, ignore_errors=True)
            return
        try:
            if self.target.exists():
                if not self.overwrite:
                    raise StorageError(f'{self.target} appeared while the run was in progress')
                shutil.rmtree(self.target)
            os.replace(staging, self.target)
        except OSError as e:
            shutil.rmtree(staging, ignore_errors=True)
            raise StorageError(f'cannot move the run into {self.target}: {e.strerror}') from e
        except StorageError:
            shutil.rmtree(staging, ignore_errors=True)
            raise
        logger.info('Run directory written', context={'path': str(self.target)})
