import math

from src.dynamics.models import AffineTwist, FinitePermutation, Lorenz63, Odometer, TorusRotation


def torus_rotation() -> TorusRotation:
    return TorusRotation(alpha=(math.sqrt(2.0), math.sqrt(3.0)))


def affine_twist() -> AffineTwist:
    return AffineTwist(alpha=math.sqrt(2.0))


def odometer() -> Odometer:
    return Odometer()


def lorenz63(flow_time: float = 0.05, rk4_step: float = 5e-4) -> Lorenz63:
    return Lorenz63(flow_time=flow_time, rk4_step=rk4_step)


def cyclic_shift(N: int, r: int = 1) -> FinitePermutation:
    """i -> i + r mod N."""
    return FinitePermutation(perm=tuple((i + r) % N for i in range(N)))
