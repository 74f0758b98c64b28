"""Runs, days, and helpers for working with sets of runs.

A run is one of the teacher's six options: a test on one of the five
weekdays, or no test at all ("none"). Runs are linearly ordered
Mo < Tu < We < Th < Fr < none.
"""

from __future__ import annotations

import enum
from typing import FrozenSet, Iterable, Iterator


class Run(enum.IntEnum):
    MO = 0
    TU = 1
    WE = 2
    TH = 3
    FR = 4
    NONE = 5

    @property
    def label(self) -> str:
        return _LABELS[self]

    @property
    def is_day(self) -> bool:
        return self is not Run.NONE

    @classmethod
    def from_label(cls, text: str) -> "Run":
        try:
            return _BY_LABEL[text]
        except KeyError:
            raise ValueError(f"unknown run name {text!r}") from None

    def successor(self) -> "Run":
        """The run after this day; defined for every day (Fr -> none)."""
        if self is Run.NONE:
            raise ValueError("none has no successor")
        return Run(self + 1)

    def predecessor(self) -> "Run":
        if self is Run.MO:
            raise ValueError("Mo has no predecessor")
        return Run(self - 1)

    def __repr__(self) -> str:
        return f"Run.{self.name}"


_LABELS = {
    Run.MO: "Mo",
    Run.TU: "Tu",
    Run.WE: "We",
    Run.TH: "Th",
    Run.FR: "Fr",
    Run.NONE: "none",
}
_BY_LABEL = {label: run for run, label in _LABELS.items()}

RUNS: tuple[Run, ...] = tuple(Run)
DAYS: tuple[Run, ...] = tuple(r for r in Run if r.is_day)
ALL_RUNS: FrozenSet[Run] = frozenset(Run)
DAY_SET: FrozenSet[Run] = frozenset(DAYS)
NO_RUNS: FrozenSet[Run] = frozenset()

RunSet = FrozenSet[Run]


def mask_of(runs: Iterable[Run]) -> int:
    """6-bit mask of a run set; the canonical ordering key for subsets."""
    mask = 0
    for r in runs:
        mask |= 1 << r
    return mask


def runs_of(mask: int) -> RunSet:
    return frozenset(r for r in RUNS if mask & (1 << r))


def subsets() -> Iterator[RunSet]:
    """All 64 subsets of the run set, in mask order."""
    for mask in range(64):
        yield runs_of(mask)


def max_run(runs: Iterable[Run]) -> Run | None:
    return max(runs, default=None)


def drop_max(runs: RunSet) -> RunSet:
    """K - {max K}, with the empty set mapped to itself."""
    if not runs:
        return NO_RUNS
    return runs - {max(runs)}


def format_runs(runs: Iterable[Run]) -> str:
    return "{" + ",".join(r.label for r in sorted(runs)) + "}"


def parse_run_set(text: str) -> RunSet:
    """Parse a run-set expression: "R", "D", "{Mo,none}" or a bare comma list."""
    body = text.strip()
    if body == "R":
        return ALL_RUNS
    if body == "D":
        return DAY_SET
    if body.startswith("{"):
        if not body.endswith("}"):
            raise ValueError(f"unbalanced braces in run set {text!r}")
        body = body[1:-1]
    if not body.strip():
        return NO_RUNS
    return frozenset(Run.from_label(part.strip()) for part in body.split(","))
