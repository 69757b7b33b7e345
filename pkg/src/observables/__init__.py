from src.observables.evaluate import evaluate, observe
from src.observables.models import (
    AtomVector,
    BoxIndicator,
    Coordinate,
    GaussianBump,
    IntervalExpSin,
    ObservableKind,
    ObservableSpec,
    TorusExpTrig,
)

__all__ = [
    'AtomVector',
    'BoxIndicator',
    'Coordinate',
    'GaussianBump',
    'IntervalExpSin',
    'ObservableKind',
    'ObservableSpec',
    'TorusExpTrig',
    'evaluate',
    'observe',
]
