import json
from pathlib import Path
from typing import Any

from pydantic import BaseModel, ValidationError

from src.core.exceptions import InvalidInputError, StorageError
from src.filter import FilterModel


def write_json(path: Path, payload: BaseModel | dict[str, Any]) -> Path:
    """Indented JSON with sorted keys, stable across runs."""
    data = payload.model_dump(mode='json') if isinstance(payload, BaseModel) else payload
    try:
        path.write_text(json.dumps(data, indent=2, sort_keys=True) + '\n', encoding='utf-8')
    except OSError as e:
        raise StorageError(f'cannot write {path}: {e.strerror}') from e
    return path


def save_model(path: Path, model: FilterModel) -> Path:
    return write_json(path, model)


def load_model(path: Path) -> FilterModel:
    try:
        text = path.read_text(encoding='utf-8')
    except OSError as e:
        raise StorageError(f'cannot read {path}: {e.strerror}') from e
    try:
        return FilterModel.model_validate_json(text)
    except ValidationError as e:
        raise InvalidInputError(f'malformed model file {path}: {e.error_count()} validation errors') from e


def report_path(model_path: Path) -> Path:
    """model.json -> model.report.json"""
    return model_path.with_name(f'{model_path.stem}.report.json')
