"""Threshold sweeps over scored predictions and paired metric curves.

A sweep classifies the sample set at every tau on a grid and attaches the
full metric report per point.  Pairing scaled MCC with F1 or P4 gives the
two comparison curves, and the optimal threshold is the grid point closest
to the ideal corner (1, 1) in that plane.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, NamedTuple, Sequence, TextIO

from . import csvio
from .confusion import ConfusionMatrix, ScoredSample, classify_at_threshold
from .errors import BadGridError, CsvFormatError, EmptyInputError, NoDefinedPointsError
from .metrics import MetricReport, MetricValue, evaluate_all

PAIR_METRICS = ("f1", "p4")


class CurvePoint(NamedTuple):
    matrix: ConfusionMatrix
    report: MetricReport


@dataclass(frozen=True)
class ThresholdCurve:
    """Per-threshold confusion matrices and metric reports."""

    taus: tuple[float, ...]
    points: tuple[CurvePoint, ...]

    def __post_init__(self):
        if len(self.taus) != len(self.points):
            raise ValueError("taus and points must have equal length")
        for a, b in zip(self.taus, self.taus[1:]):
            if not a < b:
                raise ValueError("taus must be strictly increasing")


def make_grid(tau0: float, tau_n: float, delta: float) -> tuple[float, ...]:
    """Grid tau0, tau0+delta, ... capped to end exactly at tau_n."""
    if delta <= 0:
        raise BadGridError(f"delta must be positive, got {delta!r}")
    if not (0.0 <= tau0 < tau_n <= 1.0):
        raise BadGridError(f"need 0 <= tau0 < tau_n <= 1, got tau0={tau0!r}, tau_n={tau_n!r}")
    taus = []
    i = 0
    while True:
        tau = tau0 + i * delta
        # snap near-misses of the endpoint onto it instead of overshooting
        if tau >= tau_n - delta * 1e-9:
            break
        taus.append(tau)
        i += 1
    taus.append(tau_n)
    return tuple(taus)


def threshold_sweep(
    samples: Sequence[ScoredSample],
    tau0: float = 0.0,
    tau_n: float = 1.0,
    delta: float = 0.01,
) -> ThresholdCurve:
    """Classify `samples` at every grid threshold and report all metrics."""
    if len(samples) == 0:
        raise EmptyInputError("no samples to sweep")
    taus = make_grid(tau0, tau_n, delta)
    points = []
    for tau in taus:
        matrix = classify_at_threshold(samples, tau)
        points.append(CurvePoint(matrix, evaluate_all(matrix)))
    return ThresholdCurve(taus=taus, points=tuple(points))


class PairedCurvePoint(NamedTuple):
    """One threshold's position in the (scaled MCC, F1-or-P4) unit square."""

    tau: float
    x: MetricValue
    y: MetricValue
    pair: str

    @property
    def is_defined(self) -> bool:
        return self.x.is_defined and self.y.is_defined


def paired_curve(curve: ThresholdCurve, y_metric: str) -> list[PairedCurvePoint]:
    """Project a threshold curve onto x = scaled MCC, y = `y_metric`.

    Points with an undefined coordinate are kept (for export) but flag
    themselves via `is_defined`.
    """
    if y_metric not in PAIR_METRICS:
        raise ValueError(f"y_metric must be one of {PAIR_METRICS}, got {y_metric!r}")
    pair = f"mcc-{y_metric}"
    return [
        PairedCurvePoint(tau, point.report.mcc_scaled, getattr(point.report, y_metric), pair)
        for tau, point in zip(curve.taus, curve.points)
    ]


@dataclass(frozen=True)
class OptimalThreshold:
    tau: float
    distance: float
    metric_pair: str


def optimal_threshold(paired: Iterable[PairedCurvePoint]) -> OptimalThreshold:
    """The tau whose point lies closest to the ideal corner (1, 1).

    Only fully defined points compete; ties go to the smallest tau, so the
    result does not depend on point order.
    """
    best = None
    pair = ""
    for point in paired:
        pair = point.pair
        if not point.is_defined:
            continue
        distance = math.hypot(1.0 - point.x.value, 1.0 - point.y.value)
        if best is None or (distance, point.tau) < best:
            best = (distance, point.tau)
    if best is None:
        raise NoDefinedPointsError(f"no fully defined points on the {pair or 'paired'} curve")
    distance, tau = best
    return OptimalThreshold(tau=tau, distance=distance, metric_pair=pair)


def write_curve_csv(curve: ThresholdCurve, out: TextIO) -> None:
    """Write the curve in the standard metrics CSV layout, keyed by tau."""
    rows = [
        (repr(tau), point.matrix, point.report)
        for tau, point in zip(curve.taus, curve.points)
    ]
    csvio.write_rows(out, rows, key_column="tau")


def read_curve_csv(path: str | Path) -> ThresholdCurve:
    """Read a curve CSV written by `write_curve_csv` back, losslessly."""
    key_column, rows = csvio.read_rows(path)
    if key_column != "tau":
        raise CsvFormatError(f"expected a tau-keyed curve CSV, got key {key_column!r}")
    taus = tuple(float(key) for key, _, _ in rows)
    points = tuple(CurvePoint(matrix, report) for _, matrix, report in rows)
    return ThresholdCurve(taus=taus, points=points)
