"""Deterministic simulated-classifier studies.

A simulated classifier is plain rate arithmetic: fix the population size, the
positive fraction, and the per-class accuracy rates, and the confusion matrix
follows.  Rounding is half away from zero, applied first to the number of
actual positives and then to tp and tn, with fn and fp as exact remainders;
this scheme reproduces the reference matrices C1..C4 bit-exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .confusion import ConfusionMatrix
from .errors import BadGridError, DegeneratePopulationError
from .metrics import MetricReport, evaluate_all


@dataclass(frozen=True)
class SimulationSpec:
    """Parameters of one simulated classifier run."""

    population: int
    pos_fraction: float
    tpr: float
    tnr: float

    def __post_init__(self):
        if self.population < 1:
            raise ValueError(f"population must be >= 1, got {self.population}")
        if not 0.0 < self.pos_fraction < 1.0:
            raise ValueError(f"pos_fraction must be in (0, 1), got {self.pos_fraction!r}")
        for name in ("tpr", "tnr"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise ValueError(f"{name} must be in [0, 1], got {value!r}")


def _round_half_up(x: float) -> int:
    # half away from zero; inputs here are always non-negative
    return math.floor(x + 0.5)


def confusion_from_rates(spec: SimulationSpec) -> ConfusionMatrix:
    """Confusion matrix of a simulated classifier.

    actual_positives = round(pos_fraction * population), tp = round(tpr *
    actual_positives), tn = round(tnr * actual_negatives); fn and fp are the
    remainders.  Raises DegeneratePopulationError when rounding leaves no
    actual positives or no actual negatives.
    """
    actual_positives = _round_half_up(spec.pos_fraction * spec.population)
    actual_negatives = spec.population - actual_positives
    if actual_positives == 0 or actual_negatives == 0:
        raise DegeneratePopulationError(
            f"population {spec.population} with pos_fraction {spec.pos_fraction} "
            f"leaves {actual_positives} positives / {actual_negatives} negatives"
        )
    tp = _round_half_up(spec.tpr * actual_positives)
    tn = _round_half_up(spec.tnr * actual_negatives)
    return ConfusionMatrix(tp=tp, fp=actual_negatives - tn, fn=actual_positives - tp, tn=tn)


class SweepPoint(NamedTuple):
    value: float
    matrix: ConfusionMatrix
    report: MetricReport


@dataclass(frozen=True)
class SweepSeries:
    """Metric reports along one varied simulation parameter."""

    varying: str
    points: tuple[SweepPoint, ...]

    def values(self) -> tuple[float, ...]:
        return tuple(point.value for point in self.points)


def default_balance_grid() -> tuple[float, ...]:
    """Positive-fraction grid 0.01 .. 0.99 in steps of 0.01."""
    return tuple(i / 100 for i in range(1, 100))


def default_tpr_grid() -> tuple[float, ...]:
    """True-positive-rate grid 0.00 .. 1.00 in steps of 0.01."""
    return tuple(i / 100 for i in range(101))


def _check_grid(grid: Sequence[float], lo: float, hi: float, inclusive: bool) -> None:
    if len(grid) == 0:
        raise BadGridError("empty grid")
    for a, b in zip(grid, grid[1:]):
        if not a < b:
            raise BadGridError(f"grid values must be strictly increasing, got {a!r} before {b!r}")
    inside = (lambda x: lo <= x <= hi) if inclusive else (lambda x: lo < x < hi)
    for x in grid:
        if not inside(x):
            bounds = f"[{lo}, {hi}]" if inclusive else f"({lo}, {hi})"
            raise BadGridError(f"grid value {x!r} outside {bounds}")


def balance_sweep(
    population: int,
    tpr: float,
    tnr: float,
    grid: Sequence[float] | None = None,
) -> SweepSeries:
    """Vary the actual-positives fraction at fixed TPR and TNR."""
    if grid is None:
        grid = default_balance_grid()
    _check_grid(grid, 0.0, 1.0, inclusive=False)
    points = []
    for fraction in grid:
        matrix = confusion_from_rates(SimulationSpec(population, fraction, tpr, tnr))
        points.append(SweepPoint(fraction, matrix, evaluate_all(matrix)))
    return SweepSeries(varying="pos_fraction", points=tuple(points))


def tpr_sweep(
    population: int,
    pos_fraction: float,
    tnr: float,
    grid: Sequence[float] | None = None,
) -> SweepSeries:
    """Vary the true positive rate at a fixed population balance and TNR."""
    if grid is None:
        grid = default_tpr_grid()
    _check_grid(grid, 0.0, 1.0, inclusive=True)
    points = []
    for tpr in grid:
        matrix = confusion_from_rates(SimulationSpec(population, pos_fraction, tpr, tnr))
        points.append(SweepPoint(tpr, matrix, evaluate_all(matrix)))
    return SweepSeries(varying="tpr", points=tuple(points))


def edge_cases() -> list[tuple[str, ConfusionMatrix]]:
    """The four canonical edge-case matrices C1..C4 (population 10000).

    In each, exactly one of the four conditional rates is driven near zero
    while the others stay moderately close to one.  C2 is the label swap of
    C1, and C4 the label swap of C3.
    """
    c1 = confusion_from_rates(SimulationSpec(10_000, 0.005, 0.9, 0.9))
    c2 = confusion_from_rates(SimulationSpec(10_000, 0.995, 0.9, 0.9))
    c3 = confusion_from_rates(SimulationSpec(10_000, 0.10, 0.05, 0.999))
    c4 = confusion_from_rates(SimulationSpec(10_000, 0.90, 0.999, 0.05))
    return [("C1", c1), ("C2", c2), ("C3", c3), ("C4", c4)]
