"""
Property suites on finite permutation oracles, where every inner product is exact.

Each suite builds its cases from the seeded PCG64 stream and reports pass/fail per case.
"""

import math
from abc import ABC, abstractmethod
from collections.abc import Iterator

import numpy as np

from src.core.exceptions import InvalidInputError
from src.core.logger import get_logger
from src.diagnostics import (
    autocorr_bound_check,
    autocorr_from_states,
    pseudospec_epsilon,
    verify_pseudospectrum,
)
from src.dynamics import make_rng
from src.filter import fit, fit_from_gram
from src.numerics import dft, idft
from src.observables import AtomVector
from src.oracle import (
    FiniteSystem,
    SpectralAtom,
    SzegoVerdict,
    TraceMeasure,
    decay_probe,
    dft_cyclicity,
    exact_autocorr,
    is_cyclic,
    norm,
    oracle_signal,
    prevalence_probe,
    szego_log_integral,
    trace_measure,
    weak_pred_vandermonde,
)
from src.services.oracle_checks.models import CaseResult, SuiteReport

logger = get_logger(__name__)

RANDOM_VECTORS = 500
MOMENT_TOL = 1e-10
EXACT_OBJECTIVE = 1e-20
EXACT_EPSILON = 1e-8
VANDERMONDE_RESIDUAL = 1e-16
MAX_VANDERMONDE_ATOMS = 12
SZEGO_GRID = 256
SZEGO_FLOOR = 1e-12


def coprime_shifts(N: int, limit: int = 3) -> list[int]:
    """Ergodic shifts r of Z_N, the first few starting from r = 1."""
    return [r for r in range(1, max(N, 2)) if math.gcd(r, N) == 1][:limit]


def structured_vectors(N: int) -> dict[str, np.ndarray]:
    """Vectors whose DFT has exact zeros, and a few with none."""
    atoms = np.arange(N)
    vectors = {
        'delta': (atoms == 0).astype(float),
        'constant': np.ones(N),
        'ramp': atoms.astype(float),
        'decay-probe': np.asarray(decay_probe(N).values),
    }
    for k in range(1, N // 2 + 1):
        vectors[f'cosine-{k}'] = np.cos(2 * np.pi * k * atoms / N)
    spectrum = dft(vectors['decay-probe'])
    spectrum[1] = spectrum[-1] = 0.0
    vectors['missing-mode-1'] = np.real(idft(spectrum))
    return vectors


def flat_spectrum_vector(N: int, rng: np.random.Generator) -> np.ndarray:
    """Real vector with |DFT| = 1 at every frequency and random phases."""
    phases = np.exp(2j * np.pi * rng.random(N))
    phases[0] = 1.0
    if N % 2 == 0:
        phases[N // 2] = 1.0
    for k in range(1, (N + 1) // 2):
        phases[N - k] = np.conj(phases[k])
    return np.real(idft(phases))


class BaseOracleSuite(ABC):
    """
    Base class for oracle property suites.
    Subclasses set name and min_atoms and yield their cases.
    """

    name: str = ''
    min_atoms: int = 1

    def __init__(self, trials: int = 100):
        if not self.name:
            raise ValueError(f'name must be set on {self.__class__.__name__}')
        if trials < 1:
            raise InvalidInputError(f'trials must be positive, got {trials}')
        self.trials = trials

    @abstractmethod
    def _cases(self, N: int, rng: np.random.Generator, seed: int) -> Iterator[CaseResult]:
        pass

    def run(self, N: int, seed: int) -> SuiteReport:
        if N < self.min_atoms:
            raise InvalidInputError(f'{self.name} needs at least {self.min_atoms} atoms, got {N}')
        logger.info('Oracle suite started', context={'suite': self.name, 'N': N, 'seed': seed})
        report = SuiteReport(suite=self.name, N=N, seed=seed, cases=tuple(self._cases(N, make_rng(seed), seed)))
        log = logger.info if report.passed else logger.warning
        log('Oracle suite finished', context={'suite': self.name, 'pass_rate': report.pass_rate})
        return report


class CyclicityAgreementSuite(BaseOracleSuite):
    """Fourier criterion against the Krylov rank on ergodic shifts of Z_N."""

    name = 'cyclicity-agreement'
    min_atoms = 2

    def _cases(self, N: int, rng: np.random.Generator, seed: int) -> Iterator[CaseResult]:
        shifts = coprime_shifts(N)
        for label, vector in structured_vectors(N).items():
            for r in shifts:
                fourier = dft_cyclicity(N, r, vector)
                krylov = is_cyclic(FiniteSystem.cyclic_shift(N, r), vector)
                yield CaseResult(
                    name=f'{label}/r={r}',
                    passed=fourier == krylov,
                    data={'dft': fourier, 'krylov': krylov},
                )

        disagreements = []
        for j in range(RANDOM_VECTORS):
            r = shifts[j % len(shifts)]
            vector = rng.standard_normal(N)
            if dft_cyclicity(N, r, vector) != is_cyclic(FiniteSystem.cyclic_shift(N, r), vector):
                disagreements.append(j)
        yield CaseResult(
            name='random',
            passed=not disagreements,
            data={'vectors': RANDOM_VECTORS, 'agreement': 1.0 - len(disagreements) / RANDOM_VECTORS},
        )


class MomentIdentitySuite(BaseOracleSuite):
    """Moments of the trace measure against the exact autocorrelations."""

    name = 'moment-identity'

    def _cases(self, N: int, rng: np.random.Generator, seed: int) -> Iterator[CaseResult]:
        systems = {
            'shift': FiniteSystem.cyclic_shift(N, 1),
            'random-permutation': FiniteSystem(perm=tuple(int(i) for i in rng.permutation(N))),
        }
        for label, sys in systems.items():
            f = rng.standard_normal(N)
            nu = trace_measure(sys, f)
            g = exact_autocorr(sys, f, 2 * N)
            deviation = max(abs(nu.moment(n) - g.autocorr[n]) for n in range(2 * N + 1))
            yield CaseResult(
                name=label,
                passed=deviation <= MOMENT_TOL,
                data={'max_deviation': deviation, 'atoms': len(nu.atoms), 'total_mass': nu.total_mass},
            )


class PseudospectrumVerifySuite(BaseOracleSuite):
    """
    Eigenpair residuals of U_d against epsilon for every depth, exactness of the filter at full
    depth, and the autocorrelation bound on random observables.
    """

    name = 'pseudospectrum-verify'
    min_atoms = 2

    def _cases(self, N: int, rng: np.random.Generator, seed: int) -> Iterator[CaseResult]:
        sys = FiniteSystem.cyclic_shift(N, 1)

        f = AtomVector(values=tuple(rng.standard_normal(N)))
        for d in range(1, N + 1):
            report = verify_pseudospectrum(sys, f, d)
            yield CaseResult(
                name=f'eigenpairs/d={d}',
                passed=report.holds,
                data={'epsilon': report.epsilon, 'worst_defect': report.worst_defect},
            )

        for label, values in (('delta', np.eye(N)[0]), ('flat-spectrum', flat_spectrum_vector(N, rng))):
            cyclic = AtomVector(values=tuple(values))
            model = fit(oracle_signal(sys, cyclic, 0, 4 * N + 1), N)
            epsilon = pseudospec_epsilon(exact_autocorr(sys, cyclic, N), N)
            yield CaseResult(
                name=f'full-depth/{label}',
                passed=model.objective <= EXACT_OBJECTIVE and epsilon <= EXACT_EPSILON,
                data={'objective': model.objective, 'epsilon': epsilon},
            )

        if N < 3:
            return
        atoms = np.arange(N)
        failures = []
        for trial in range(self.trials):
            f = rng.standard_normal(N)
            d = int(rng.integers(1, N))
            n_max = 3 * N
            g = exact_autocorr(sys, f, n_max)
            report = autocorr_from_states(sys, AtomVector(values=tuple(f)), fit_from_gram(g, d), atoms, n_max)
            check = autocorr_bound_check(report, g, norm(f))
            if not np.all(check.passed):
                failures.append({'trial': trial, 'd': d, 'lags': np.flatnonzero(~check.passed).tolist()})
        yield CaseResult(
            name='autocorr-bound',
            passed=not failures,
            data={'observables': self.trials, 'failures': failures},
        )


class VandermondeSuite(BaseOracleSuite):
    """Weak-predictiveness certificates on atomic measures and the Szego classifier."""

    name = 'vandermonde'

    def _cases(self, N: int, rng: np.random.Generator, seed: int) -> Iterator[CaseResult]:
        for k in range(1, min(N, MAX_VANDERMONDE_ATOMS) + 1):
            offset = rng.random()
            weights = rng.random(k) + 0.1
            atoms = tuple(
                SpectralAtom(frequency=((j + offset) / k) % 1.0, weight=float(w / weights.sum()))
                for j, w in enumerate(weights)
            )
            certificate = weak_pred_vandermonde(TraceMeasure(atoms=atoms))
            yield CaseResult(
                name=f'atoms={k}',
                passed=certificate.residual <= VANDERMONDE_RESIDUAL,
                data={'residual': certificate.residual},
            )

        lebesgue = szego_log_integral(np.ones(SZEGO_GRID), SZEGO_FLOOR)
        yield CaseResult(
            name='szego/lebesgue',
            passed=lebesgue.verdict is SzegoVerdict.FAILS,
            data={'value': lebesgue.value, 'verdict': lebesgue.verdict.value},
        )

        atomic = np.zeros(SZEGO_GRID)
        atomic[rng.choice(SZEGO_GRID, size=min(N, 8), replace=False)] = 1.0
        spikes = szego_log_integral(atomic, SZEGO_FLOOR)
        yield CaseResult(
            name='szego/atomic',
            passed=spikes.verdict is SzegoVerdict.HOLDS,
            data={'value': spikes.value, 'verdict': spikes.verdict.value},
        )


class PrevalenceProbeSuite(BaseOracleSuite):
    """f + lambda p is cyclic for almost every lambda when p is cyclic."""

    name = 'prevalence-probe'
    min_atoms = 3

    def _cases(self, N: int, rng: np.random.Generator, seed: int) -> Iterator[CaseResult]:
        probe = decay_probe(N)
        for r in coprime_shifts(N):
            base = np.cos(2 * np.pi * np.arange(N) / N)
            fraction = prevalence_probe(N, r, base, probe, self.trials, seed)
            yield CaseResult(
                name=f'cosine-1/r={r}',
                passed=fraction == 1.0,
                data={'trials': self.trials, 'fraction': fraction},
            )


SUITES: dict[str, type[BaseOracleSuite]] = {
    suite.name: suite
    for suite in (
        CyclicityAgreementSuite,
        MomentIdentitySuite,
        PseudospectrumVerifySuite,
        VandermondeSuite,
        PrevalenceProbeSuite,
    )
}


def run_suite(name: str, N: int, seed: int, trials: int = 100) -> SuiteReport:
    try:
        suite = SUITES[name](trials=trials)
    except KeyError:
        raise InvalidInputError(f'unknown oracle subcheck {name!r}, expected one of {", ".join(SUITES)}') from None
    return suite.run(N, seed)
