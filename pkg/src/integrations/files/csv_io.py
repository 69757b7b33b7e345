"""
Flat CSV files: one header row, numbers written with 17 significant digits so that binary64
values round-trip exactly.
"""

import csv
from collections.abc import Iterable, Sequence
from pathlib import Path

import numpy as np

from src.core.exceptions import InvalidInputError, StorageError
from src.diagnostics import AutocorrReport, ErrorCurve
from src.numerics import ComplexSpectrum


def format_number(value: float | int) -> str:
    if isinstance(value, int | np.integer):
        return str(int(value))
    return f'{float(value):.17g}'


def write_rows(path: Path, header: Sequence[str], rows: Iterable[Sequence[float | int]]) -> Path:
    try:
        with path.open('w', newline='', encoding='utf-8') as file:
            writer = csv.writer(file, lineterminator='\n')
            writer.writerow(header)
            writer.writerows([format_number(value) for value in row] for row in rows)
    except OSError as e:
        raise StorageError(f'cannot write {path}: {e.strerror}') from e
    return path


def write_error_curves(path: Path, curves: Sequence[ErrorCurve]) -> Path:
    rows = ((d, curve.steps, mse) for curve in curves for d, mse in zip(curve.depths, curve.mse, strict=True))
    return write_rows(path, ('d', 'steps', 'mse'), rows)


def write_autocorr(path: Path, report: AutocorrReport) -> Path:
    rows = zip(report.lags, report.a_true, report.a_filter, strict=True)
    return write_rows(path, ('lag', 'a_true', 'a_filter'), rows)


def write_spectrum(path: Path, spectrum: ComplexSpectrum) -> Path:
    rows = zip(spectrum.values.real, spectrum.values.imag, spectrum.residuals, strict=True)
    return write_rows(path, ('re', 'im', 'residual'), rows)


def write_series(path: Path, values: np.ndarray, index: str = 't') -> Path:
    return write_rows(path, (index, 'value'), zip(range(values.size), values, strict=True))


def read_series(path: Path) -> np.ndarray:
    """
    Scalar series from a CSV file: the `value` column when a header names one, otherwise the
    last column. A non-numeric first row is treated as a header.
    """
    try:
        with path.open(newline='', encoding='utf-8') as file:
            rows = [row for row in csv.reader(file) if row and any(cell.strip() for cell in row)]
    except OSError as e:
        raise StorageError(f'cannot read {path}: {e.strerror}') from e
    if not rows:
        raise InvalidInputError(f'{path} holds no data')

    column = -1
    try:
        float(rows[0][-1])
    except ValueError:
        header = [cell.strip() for cell in rows[0]]
        column = header.index('value') if 'value' in header else -1
        rows = rows[1:]

    try:
        values = np.array([float(row[column]) for row in rows])
    except (ValueError, IndexError) as e:
        raise InvalidInputError(f'malformed series in {path}: {e}') from e
    if values.size == 0:
        raise InvalidInputError(f'{path} holds a header but no values')
    if not np.all(np.isfinite(values)):
        raise InvalidInputError(f'{path} holds non-finite values')
    return values
