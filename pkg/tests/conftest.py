import numpy as np
import pytest

from src.dynamics import sample_initials, torus_rotation, trajectory
from src.filter import TrajectoryBuffer
from src.observables import observe
from src.observables.catalog import torus_smooth
from src.oracle import FiniteSystem

TORUS_M = 10_000
TORUS_N = 10_000
TORUS_MAX_DEPTH = 40


@pytest.fixture
def z3() -> FiniteSystem:
    return FiniteSystem.cyclic_shift(3)


@pytest.fixture
def z8() -> FiniteSystem:
    return FiniteSystem.cyclic_shift(8)


@pytest.fixture
def z16() -> FiniteSystem:
    return FiniteSystem.cyclic_shift(16)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(2024))


@pytest.fixture
def z3_series() -> TrajectoryBuffer:
    return TrajectoryBuffer.from_values(np.tile([1.0, 0.0, 0.0], 10))


@pytest.fixture(scope='session')
def torus_buffers() -> tuple[TrajectoryBuffer, TrajectoryBuffer]:
    """Training and testing observations of f1 on the irrational torus rotation."""
    sys = torus_rotation()
    obs = torus_smooth()
    train = observe(obs, trajectory(sys, sample_initials(sys, 1, 0)[0], TORUS_M), system=sys, seed=0)
    test = observe(
        obs,
        trajectory(sys, sample_initials(sys, 1, 1)[0], TORUS_N + TORUS_MAX_DEPTH),
        system=sys,
        seed=1,
    )
    return train, test
