import numpy as np
import pytest

from src.core.exceptions import InvalidInputError, NumericalDegeneracyError
from src.diagnostics import (
    ErrorCurve,
    autocorr_bound_check,
    autocorr_from_series,
    autocorr_from_states,
    autocorr_protocol,
    autocorr_time_average,
    dyadic_alignment,
    eigenvalue_drift,
    empirical_gram,
    error_curve,
    filter_stability_probe,
    forecast_mse,
    hausdorff_distance,
    predecessor_residual,
    projection_residual,
    pseudospec_epsilon,
    verify_pseudospectrum,
)
from src.dynamics import torus_rotation
from src.filter import FilterModel, GramSource, GramSummary, TrajectoryBuffer, fit, fit_from_gram
from src.observables import AtomVector
from src.observables.catalog import torus_smooth
from src.oracle import exact_autocorr, norm

Z3_MODEL = FilterModel(d=3, coeffs=(0.0, 0.0, 1.0))


def test_forecast_exact_model(z3_series):
    assert forecast_mse(Z3_MODEL, z3_series) == 0.0
    assert forecast_mse(Z3_MODEL, z3_series, steps=4) == 0.0


def test_forecast_counts_windows():
    y = TrajectoryBuffer.from_values([0.0, 0.0, 1.0])
    # a single window (0, 0) predicting 0 against the target 1
    assert forecast_mse(FilterModel(d=2, coeffs=(1.0, 0.0)), y) == 1.0


def test_forecast_preconditions(z3_series):
    with pytest.raises(InvalidInputError):
        forecast_mse(Z3_MODEL, z3_series, steps=0)
    with pytest.raises(InvalidInputError):
        forecast_mse(Z3_MODEL, TrajectoryBuffer.from_values([1.0, 0.0, 0.0]))


def test_error_curve_objectives_nested(torus_buffers):
    train, test = torus_buffers
    depths = list(range(1, 41))
    curve = error_curve(train, test, depths, row_start=max(depths) - 1)

    assert curve.depths == tuple(depths)
    assert np.all(curve.mse > 0)
    assert np.max(np.diff(curve.objectives)) <= 1e-12


def test_torus_error_decays_exponentially(torus_buffers):
    train, test = torus_buffers
    depths = np.arange(1, 31)
    curve = error_curve(train, test, depths.tolist())

    # infinite-data errors: 3.02 at d=1, 0.33 at 10, 0.077 at 20, 0.022 at 30
    assert curve.mse[-1] <= 1e-2 * curve.mse[0]
    assert np.all(np.diff(curve.mse[[0, 9, 19, 29]]) < 0)
    slope = np.polyfit(depths, np.log(curve.mse), 1)[0]
    assert slope < 0


def test_error_curve_concat_keeps_order():
    a = ErrorCurve(depths=(1, 2), mse=np.array([1.0, 0.5]), steps=1, objectives=np.array([1.0, 0.4]))
    b = ErrorCurve(depths=(3,), mse=np.array([0.2]), steps=1, objectives=np.array([0.1]))
    merged = ErrorCurve.concat([a, b])

    assert merged.depths == (1, 2, 3)
    np.testing.assert_array_equal(merged.mse, [1.0, 0.5, 0.2])
    np.testing.assert_array_equal(merged.objectives, [1.0, 0.4, 0.1])

    with pytest.raises(ValueError):
        ErrorCurve.concat([a, b.model_copy(update={'steps': 2})])


def test_autocorr_lag_zero_is_shared(torus_buffers):
    train, _ = torus_buffers
    report = autocorr_protocol(torus_rotation(), torus_smooth(), fit(train, 5), 200, 12, seed=3)

    assert report.a_true[0] == report.a_filter[0]
    assert report.n_max == 12
    assert report.N == 200


def test_autocorr_zero_branch_on_oracle(z8, rng):
    atoms = np.arange(8)
    for _ in range(100):
        f = rng.standard_normal(8)
        d = int(rng.integers(1, 8))
        g = exact_autocorr(z8, f, 24)
        report = autocorr_from_states(z8, AtomVector(values=tuple(f)), fit_from_gram(g, d), atoms, 24)
        differences = np.abs(report.a_true - report.a_filter)

        assert differences[: d + 1].max() <= 1e-10
        np.testing.assert_allclose(report.a_true, g.autocorr, atol=1e-12)
        assert np.all(autocorr_bound_check(report, g, norm(f)).passed)


def test_bound_check_branches(z8, rng):
    f = rng.standard_normal(8)
    d = 3
    g = exact_autocorr(z8, f, 10)
    report = autocorr_from_states(z8, AtomVector(values=tuple(f)), fit_from_gram(g, d), np.arange(8), 10)
    check = autocorr_bound_check(report, g, norm(f))

    np.testing.assert_array_equal(check.bounds[: d + 1], 0.0)
    assert check.bounds[d + 1] == pytest.approx(np.sqrt(projection_residual(g, d)) * norm(f))
    assert check.bounds[d + 2] == pytest.approx(2 * pseudospec_epsilon(g, d) * norm(f) ** 2)
    assert check.tolerance == 1e-10


def test_autocorr_from_series(z3_series):
    report = autocorr_from_series(z3_series, Z3_MODEL, 6)
    np.testing.assert_allclose(report.a_true, report.a_filter)
    assert report.N == 30 - 3 - 6 + 1

    with pytest.raises(InvalidInputError):
        autocorr_from_series(z3_series, Z3_MODEL, 40)


def test_time_average():
    y = TrajectoryBuffer.from_values([1.0, 2.0, 3.0])
    np.testing.assert_allclose(autocorr_time_average(y, 2), [14.0 / 3.0, 4.0, 3.0])

    g = empirical_gram(y, 1)
    assert g.source is GramSource.EMPIRICAL_TIME_AVERAGE
    assert g.sample_size == 2
    assert g.slack > 0

    with pytest.raises(InvalidInputError):
        autocorr_time_average(y, 3)


def test_epsilon_of_constant(z3):
    g = exact_autocorr(z3, np.ones(3), 3)
    assert predecessor_residual(g, 1) == 1.0
    assert projection_residual(g, 1) == 0.0
    assert pseudospec_epsilon(g, 1) == 0.0
    with pytest.raises(NumericalDegeneracyError):
        pseudospec_epsilon(g, 2)


def test_epsilon_vanishes_at_full_depth(z8):
    g = exact_autocorr(z8, np.eye(8)[0], 8)
    assert pseudospec_epsilon(g, 8) <= 1e-8
    assert pseudospec_epsilon(g, 4) > 0.1


def test_projection_residual_nonincreasing_in_depth(z16, rng):
    g = exact_autocorr(z16, rng.standard_normal(16), 16)
    numerators = np.array([projection_residual(g, d) for d in range(1, 17)])

    assert np.all(numerators >= 0)
    assert np.max(np.diff(numerators)) <= 1e-10 * g.autocorr[0]


@pytest.mark.parametrize('d', [1, 2, 3, 4])
def test_epsilon_of_white_signal(d):
    g = GramSummary(autocorr=np.array([2.0, 0.0, 0.0, 0.0, 0.0]), source=GramSource.EXACT_ORACLE, sample_size=1)
    assert pseudospec_epsilon(g, d) == pytest.approx(1.0, abs=1e-12)


@pytest.mark.parametrize('system', ['z8', 'z16'])
def test_pseudospectral_inequality(system, request, rng):
    sys = request.getfixturevalue(system)
    f = AtomVector(values=tuple(rng.standard_normal(sys.N)))
    for d in range(1, sys.N + 1):
        report = verify_pseudospectrum(sys, f, d)
        assert report.holds, f'd={d}: worst defect {report.worst_defect}'
        assert report.eigenvalues.size == d


def test_verify_pseudospectrum_depth_range(z8):
    with pytest.raises(InvalidInputError):
        verify_pseudospectrum(z8, np.ones(8), 9)


def test_stability_probe(torus_buffers):
    train, _ = torus_buffers
    probe = filter_stability_probe(train, 5)

    assert probe.lengths[:3] == (10, 20, 40)
    assert probe.lengths[-1] <= len(train)
    assert probe.distances.size == len(probe.lengths) - 1

    with pytest.raises(InvalidInputError):
        filter_stability_probe(train.slice(0, 19), 5)


def test_stability_probe_on_periodic_signal():
    y = TrajectoryBuffer.from_values(np.tile([1.0, 0.0, 0.0], 16))
    probe = filter_stability_probe(y, 3)

    assert probe.lengths == (6, 12, 24, 48)
    assert not probe.degenerate
    np.testing.assert_allclose(probe.distances, 0.0, atol=1e-12)


def test_eigenvalue_drift(torus_buffers):
    train, _ = torus_buffers
    drift = eigenvalue_drift(train, [2, 4, 6])
    assert drift.shape == (2,)
    assert np.all(drift >= 0)


def test_hausdorff_distance():
    a = np.array([0.0, 1.0])
    b = np.array([0.0, 1.0, 3.0])
    assert hausdorff_distance(a, b) == 2.0
    assert hausdorff_distance(a, a) == 0.0


def test_dyadic_alignment():
    roots = np.exp(2j * np.pi * np.arange(8) / 8)
    assert dyadic_alignment(roots, 8) == 1.0
    assert dyadic_alignment(0.5 * roots, 8) == 0.0
    assert dyadic_alignment(np.array([1.0, 0.5]), 8) == 0.5
