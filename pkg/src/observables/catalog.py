"""The observables used in the numerical experiments."""

from src.dynamics.models import Lorenz63
from src.observables.models import BoxIndicator, Coordinate, GaussianBump, IntervalExpSin, TorusExpTrig


def torus_smooth() -> TorusExpTrig:
    """exp(sin(4 pi x1) + cos(6 pi x2))."""
    return TorusExpTrig(a=1.0, k1=2, b=1.0, k2=3)


def torus_box() -> BoxIndicator:
    """Indicator of [0, 1/2) x [1/2, 1)."""
    return BoxIndicator(lo=(0.0, 0.5), hi=(0.5, 1.0))


def twist_observable(b: float = 1.0) -> TorusExpTrig:
    """exp(2 sin(4 pi x1) + b cos(6 pi x2)); b = 0 depends on the rotation factor only."""
    return TorusExpTrig(a=2.0, k1=2, b=b, k2=3)


def odometer_observable() -> IntervalExpSin:
    return IntervalExpSin(k=3)


def lorenz_x1() -> Coordinate:
    return Coordinate(index=0)


def lorenz_bump(sys: Lorenz63) -> GaussianBump:
    """Gaussian bump of width delta / 3 at the equilibrium x+."""
    return GaussianBump(center=sys.equilibrium_plus, width=sys.delta / 3.0)
