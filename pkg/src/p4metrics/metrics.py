"""Basic and composite binary-classifier metrics over exact confusion counts.

Policy for 0/0: any metric whose own denominator is zero is Undefined, never
coerced to 0 or 1 (the common MCC=0 convention is deliberately rejected).
Composite closed forms are evaluated on integers with a single float division
(plus one square root for MCC), so results are bit-reproducible and exactly
symmetric under label swapping.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, fields
from typing import NamedTuple

from .confusion import ConfusionMatrix
from .errors import RangeMismatchError

UNIT_RANGE = (0.0, 1.0)
SIGNED_RANGE = (-1.0, 1.0)

# slack for float round-off when validating declared ranges
_RANGE_TOLERANCE = 1e-12


@dataclass(frozen=True, slots=True)
class MetricValue:
    """A metric result: either a float in a declared range, or Undefined.

    `value` is None exactly when the metric's own formula hit a zero
    denominator.  Defined values are validated against the declared range
    with 1e-12 of slack for floating evaluation.
    """

    value: float | None
    range: tuple[float, float] = UNIT_RANGE

    def __post_init__(self):
        if self.value is not None:
            lo, hi = self.range
            if not (lo - _RANGE_TOLERANCE <= self.value <= hi + _RANGE_TOLERANCE):
                raise ValueError(f"value {self.value!r} outside declared range [{lo}, {hi}]")

    @property
    def is_defined(self) -> bool:
        return self.value is not None

    def as_float(self) -> float:
        """The value, with Undefined rendered as nan."""
        return math.nan if self.value is None else self.value


def undefined(range: tuple[float, float] = UNIT_RANGE) -> MetricValue:
    return MetricValue(None, range)


def _rate(num: int, den: int) -> MetricValue:
    if den == 0:
        return undefined(UNIT_RANGE)
    return MetricValue(num / den, UNIT_RANGE)


class BasicRates(NamedTuple):
    prec: MetricValue
    rec: MetricValue
    spec: MetricValue
    npv: MetricValue


def basic_rates(c: ConfusionMatrix) -> BasicRates:
    """The four conditional rates: PREC, REC, SPEC, NPV.

    prec = tp/(tp+fp), rec = tp/(tp+fn), spec = tn/(tn+fp), npv = tn/(tn+fn);
    each is Undefined iff its own denominator is zero.
    """
    return BasicRates(
        prec=_rate(c.tp, c.tp + c.fp),
        rec=_rate(c.tp, c.tp + c.fn),
        spec=_rate(c.tn, c.tn + c.fp),
        npv=_rate(c.tn, c.tn + c.fn),
    )


def f1(c: ConfusionMatrix) -> MetricValue:
    """F1 = 2*tp / (2*tp + fp + fn), the harmonic mean of PREC and REC.

    The closed form keeps F1 defined (value 0) when tp = 0 but fp + fn > 0;
    it is Undefined only when tp, fp, fn are all zero.
    """
    den = 2 * c.tp + c.fp + c.fn
    if den == 0:
        return undefined(UNIT_RANGE)
    return MetricValue(2 * c.tp / den, UNIT_RANGE)


def p4(c: ConfusionMatrix) -> MetricValue:
    """P4 = 4*tp*tn / (4*tp*tn + (tp+tn)*(fp+fn)).

    Harmonic mean of PREC, REC, SPEC and NPV; the integer closed form agrees
    with the four-rate harmonic mean wherever all rates are defined and
    positive, and extends it with value 0 when tp or tn is zero.  Undefined
    iff the closed-form denominator is zero.
    """
    num = 4 * c.tp * c.tn
    den = num + (c.tp + c.tn) * (c.fp + c.fn)
    if den == 0:
        return undefined(UNIT_RANGE)
    return MetricValue(num / den, UNIT_RANGE)


def _rate_sum_minus_one(a: MetricValue, b: MetricValue) -> MetricValue:
    if not (a.is_defined and b.is_defined):
        return undefined(SIGNED_RANGE)
    return MetricValue(a.value + b.value - 1, SIGNED_RANGE)


def youden(c: ConfusionMatrix) -> MetricValue:
    """Youden index (informedness): J = REC + SPEC - 1, in [-1, 1]."""
    rates = basic_rates(c)
    return _rate_sum_minus_one(rates.rec, rates.spec)


def markedness(c: ConfusionMatrix) -> MetricValue:
    """Markedness: MK = PREC + NPV - 1, in [-1, 1]."""
    rates = basic_rates(c)
    return _rate_sum_minus_one(rates.prec, rates.npv)


def mcc(c: ConfusionMatrix) -> MetricValue:
    """Matthews correlation coefficient, in [-1, 1].

    MCC = (tp*tn - fp*fn) / sqrt((tp+fp)(tp+fn)(tn+fp)(tn+fn)).  Numerator
    and radicand are exact integers; the only float steps are one square root
    and one division.  Undefined iff any of the four marginal sums is zero.
    """
    radicand = (c.tp + c.fp) * (c.tp + c.fn) * (c.tn + c.fp) * (c.tn + c.fn)
    if radicand == 0:
        return undefined(SIGNED_RANGE)
    return MetricValue((c.tp * c.tn - c.fp * c.fn) / math.sqrt(radicand), SIGNED_RANGE)


def scale_to_unit(v: MetricValue) -> MetricValue:
    """Map a [-1, 1] metric onto [0, 1] via (v + 1) / 2; Undefined propagates."""
    if v.range != SIGNED_RANGE:
        raise RangeMismatchError(f"can only rescale [-1, 1] values, got range {v.range}")
    if not v.is_defined:
        return undefined(UNIT_RANGE)
    return MetricValue((v.value + 1) / 2, UNIT_RANGE)


@dataclass(frozen=True)
class MetricReport:
    """Every metric for one confusion matrix, raw and unit-scaled."""

    prec: MetricValue
    rec: MetricValue
    spec: MetricValue
    npv: MetricValue
    f1: MetricValue
    p4: MetricValue
    mcc: MetricValue
    mcc_scaled: MetricValue
    j: MetricValue
    j_scaled: MetricValue
    mk: MetricValue
    mk_scaled: MetricValue

    def as_dict(self) -> dict[str, MetricValue]:
        """Field-order mapping of metric name to value."""
        return {field.name: getattr(self, field.name) for field in fields(self)}


METRIC_NAMES = tuple(field.name for field in fields(MetricReport))

# human-facing spellings used by the CLI tables and chart legends
DISPLAY_NAMES = {
    "prec": "PREC",
    "rec": "REC",
    "spec": "SPEC",
    "npv": "NPV",
    "f1": "F1",
    "p4": "P4",
    "mcc": "MCC",
    "mcc_scaled": "MCC'",
    "j": "J",
    "j_scaled": "J'",
    "mk": "MK",
    "mk_scaled": "MK'",
}


def evaluate_all(c: ConfusionMatrix) -> MetricReport:
    """Compute the full MetricReport for one matrix."""
    rates = basic_rates(c)
    j = _rate_sum_minus_one(rates.rec, rates.spec)
    mk = _rate_sum_minus_one(rates.prec, rates.npv)
    corr = mcc(c)
    return MetricReport(
        prec=rates.prec,
        rec=rates.rec,
        spec=rates.spec,
        npv=rates.npv,
        f1=f1(c),
        p4=p4(c),
        mcc=corr,
        mcc_scaled=scale_to_unit(corr),
        j=j,
        j_scaled=scale_to_unit(j),
        mk=mk,
        mk_scaled=scale_to_unit(mk),
    )
