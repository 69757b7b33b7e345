"""Optional SVG figures. CSV stays the contract; these are for looking at."""

from collections.abc import Sequence
from pathlib import Path

import matplotlib

matplotlib.use('Agg')
matplotlib.rcParams.update({'svg.hashsalt': 'koopman-wiener', 'svg.fonttype': 'none', 'axes.unicode_minus': False})

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from src.core.exceptions import StorageError  # noqa: E402
from src.diagnostics import AutocorrReport, ErrorCurve  # noqa: E402
from src.numerics import ComplexSpectrum  # noqa: E402

# no timestamps in the output, so reruns produce identical files
SVG_METADATA = {'Date': None, 'Creator': None}


def _save(fig: plt.Figure, path: Path) -> Path:
    try:
        fig.savefig(path, format='svg', metadata=SVG_METADATA)
    except OSError as e:
        raise StorageError(f'cannot write {path}: {e.strerror}') from e
    finally:
        plt.close(fig)
    return path


def plot_error_curves(
    path: Path,
    curves: Sequence[ErrorCurve],
    labels: Sequence[str],
    abscissa_scale: Sequence[float] | None = None,
) -> Path:
    """log10 mse against d, or against d * t when a flow time per curve is given."""
    fig, ax = plt.subplots(figsize=(6, 4), constrained_layout=True)
    scales = abscissa_scale or [1.0] * len(curves)
    for curve, label, scale in zip(curves, labels, scales, strict=True):
        ax.plot(np.asarray(curve.depths) * scale, np.log10(curve.mse), marker='.', label=label)
    ax.set_xlabel('d' if abscissa_scale is None else 'd t')
    ax.set_ylabel('log10 mse')
    ax.grid(True, alpha=0.3)
    if len(curves) > 1:
        ax.legend(loc='best', fontsize=8)
    return _save(fig, path)


def plot_autocorr(path: Path, report: AutocorrReport) -> Path:
    fig, ax = plt.subplots(figsize=(6, 4), constrained_layout=True)
    ax.plot(report.lags, report.a_true, label='system')
    ax.plot(report.lags, report.a_filter, linestyle='--', label=f'filter, d = {report.d}')
    ax.axvline(report.d, color='grey', linewidth=0.5)
    ax.set_xlabel('n')
    ax.set_ylabel('A(n)')
    ax.legend(loc='best', fontsize=8)
    return _save(fig, path)


def plot_spectrum(path: Path, spectrum: ComplexSpectrum, roots: int | None = None) -> Path:
    """Eigenvalues in the plane with the unit circle; roots marks exp(2 pi i k / roots)."""
    fig, ax = plt.subplots(figsize=(5, 5), constrained_layout=True)
    theta = np.linspace(0.0, 2 * np.pi, 400)
    ax.plot(np.cos(theta), np.sin(theta), color='grey', linewidth=0.5)
    if roots:
        marks = np.exp(2j * np.pi * np.arange(roots) / roots)
        ax.scatter(marks.real, marks.imag, s=30, facecolors='none', edgecolors='red')
    ax.scatter(spectrum.values.real, spectrum.values.imag, s=6, color='black')
    ax.set_aspect('equal')
    ax.set_xlabel('Re')
    ax.set_ylabel('Im')
    return _save(fig, path)
