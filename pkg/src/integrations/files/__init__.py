from src.integrations.files.csv_io import (
    format_number,
    read_series,
    write_autocorr,
    write_error_curves,
    write_rows,
    write_series,
    write_spectrum,
)
from src.integrations.files.model_io import load_model, report_path, save_model, write_json
from src.integrations.files.run_directory import RunDirectory

__all__ = [
    'RunDirectory',
    'format_number',
    'load_model',
    'read_series',
    'report_path',
    'save_model',
    'write_autocorr',
    'write_error_curves',
    'write_json',
    'write_rows',
    'write_series',
    'write_spectrum',
]
