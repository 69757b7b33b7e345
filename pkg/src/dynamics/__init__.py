from src.dynamics.catalog import affine_twist, cyclic_shift, lorenz63, odometer, torus_rotation
from src.dynamics.maps import inverse_step, step, subsample_flow, trajectory
from src.dynamics.models import (
    AffineTwist,
    FinitePermutation,
    Lorenz63,
    Odometer,
    SystemKind,
    SystemSpec,
    TorusRotation,
)
from src.dynamics.sampling import make_rng, sample_initials

__all__ = [
    'AffineTwist',
    'FinitePermutation',
    'Lorenz63',
    'Odometer',
    'SystemKind',
    'SystemSpec',
    'TorusRotation',
    'affine_twist',
    'cyclic_shift',
    'inverse_step',
    'lorenz63',
    'make_rng',
    'odometer',
    'sample_initials',
    'step',
    'subsample_flow',
    'torus_rotation',
    'trajectory',
]
