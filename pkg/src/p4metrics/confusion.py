"""Confusion-matrix construction, label swapping, and thresholded classification.

Counts are exact non-negative integers throughout; nothing here ever touches
floating point except the sample scores themselves.  All values are immutable
and all operations are pure functions.
"""

from __future__ import annotations

import csv
import enum
import operator
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .errors import EmptyInputError, EmptyMatrixError, NegativeCountError, SampleParseError


class Label(enum.Enum):
    """Binary class label; `opposite` is an involution."""

    POSITIVE = "positive"
    NEGATIVE = "negative"

    @property
    def opposite(self) -> "Label":
        return Label.NEGATIVE if self is Label.POSITIVE else Label.POSITIVE


@dataclass(frozen=True, slots=True)
class ConfusionMatrix:
    """2x2 contingency table of a binary classifier against a population.

    tp/fp/fn/tn are validated at construction: integral, non-negative, and
    not all zero (an empty population is unconstructible).
    """

    tp: int
    fp: int
    fn: int
    tn: int

    def __post_init__(self):
        for name in ("tp", "fp", "fn", "tn"):
            value = getattr(self, name)
            try:
                value = operator.index(value)
            except TypeError:
                raise TypeError(f"{name} must be an integer, got {value!r}") from None
            if value < 0:
                raise NegativeCountError(f"{name} must be non-negative, got {value}")
            object.__setattr__(self, name, value)
        if self.tp + self.fp + self.fn + self.tn == 0:
            raise EmptyMatrixError("all four counts are zero")

    @property
    def actual_positives(self) -> int:
        return self.tp + self.fn

    @property
    def actual_negatives(self) -> int:
        return self.fp + self.tn

    @property
    def predicted_positives(self) -> int:
        return self.tp + self.fp

    @property
    def predicted_negatives(self) -> int:
        return self.fn + self.tn

    @property
    def population(self) -> int:
        return self.tp + self.fp + self.fn + self.tn


def from_counts(tp: int, fp: int, fn: int, tn: int) -> ConfusionMatrix:
    """Build a validated ConfusionMatrix from the four counts."""
    return ConfusionMatrix(tp, fp, fn, tn)


def swap_labels(c: ConfusionMatrix) -> ConfusionMatrix:
    """Matrix after renaming positives to negatives and vice versa.

    Exchanges tp with tn and fp with fn; the population size is preserved
    and applying the swap twice returns the original matrix.
    """
    return ConfusionMatrix(tp=c.tn, fp=c.fn, fn=c.fp, tn=c.tp)


@dataclass(frozen=True)
class ScoredSample:
    """A classifier score in [0, 1] paired with the true label."""

    score: float
    label: Label

    def __post_init__(self):
        if not 0.0 <= self.score <= 1.0:
            raise ValueError(f"score must be in [0, 1], got {self.score!r}")


def classify_at_threshold(samples: Sequence[ScoredSample], tau: float) -> ConfusionMatrix:
    """Confusion matrix obtained by calling a sample positive iff score > tau.

    The comparison is strict, so tau=0 marks every sample with a nonzero
    score positive and tau=1 classifies everything negative.
    """
    if not 0.0 <= tau <= 1.0:
        raise ValueError(f"tau must be in [0, 1], got {tau!r}")
    if len(samples) == 0:
        raise EmptyInputError("no samples to classify")
    tp = fp = fn = tn = 0
    for sample in samples:
        if sample.score > tau:
            if sample.label is Label.POSITIVE:
                tp += 1
            else:
                fp += 1
        elif sample.label is Label.POSITIVE:
            fn += 1
        else:
            tn += 1
    return ConfusionMatrix(tp, fp, fn, tn)


_LABEL_ALIASES = {
    "1": Label.POSITIVE,
    "positive": Label.POSITIVE,
    "0": Label.NEGATIVE,
    "negative": Label.NEGATIVE,
}


def parse_label(text: str) -> Label:
    """Parse `1`/`0`/`positive`/`negative` (case-insensitive) into a Label."""
    label = _LABEL_ALIASES.get(text.strip().lower())
    if label is None:
        raise ValueError(f"unknown label {text!r}")
    return label


def read_scored_csv(path: str | Path) -> list[ScoredSample]:
    """Read a `score,label` CSV of scored samples, strictly.

    The header is required.  Scores must be decimals in [0, 1] and labels one
    of 1/0/positive/negative (case-insensitive); anything else aborts with a
    line-numbered SampleParseError.  A file with a header but no data rows
    raises EmptyInputError.
    """
    with open(path, newline="") as fh:
        return parse_scored_csv(fh)


def parse_scored_csv(lines: Iterable[str]) -> list[ScoredSample]:
    reader = csv.reader(lines)
    try:
        header = next(reader)
    except StopIteration:
        raise EmptyInputError("file is empty") from None
    if [column.strip().lower() for column in header] != ["score", "label"]:
        raise SampleParseError(1, f"expected header 'score,label', got {','.join(header)!r}")

    samples = []
    for line_no, row in enumerate(reader, start=2):
        if not row:
            continue  # blank line
        if len(row) != 2:
            raise SampleParseError(line_no, f"expected 2 fields, got {len(row)}")
        score_text, label_text = row
        try:
            score = float(score_text)
        except ValueError:
            raise SampleParseError(line_no, f"bad score {score_text!r}") from None
        if not 0.0 <= score <= 1.0:
            raise SampleParseError(line_no, f"score {score_text!r} outside [0, 1]")
        try:
            label = parse_label(label_text)
        except ValueError:
            raise SampleParseError(line_no, f"unknown label {label_text!r}") from None
        samples.append(ScoredSample(score, label))

    if not samples:
        raise EmptyInputError("no samples in file")
    return samples
