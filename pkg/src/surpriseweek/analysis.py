"""Replaying the students' argument and solving the announcement for a law set.

The students' derivation is replayed step by step, each step paired with
a countermodel run witnessing that the claimed formula is not provable
from the axiom system that realizes the step's situation. The general
announcement, for an arbitrary nonempty law set L, pins the axiom system
through a fixed-point condition whose solutions are found by brute force
over the 64 canonical systems.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .formula import Formula, TOP, any_day, iverson, t_eq, t_le, t_ne
from .knowledge import AxiomSystem, eval_run, sigma_of, surprising_days, tau_of
from .runs import (
    ALL_RUNS,
    DAY_SET,
    DAYS,
    Run,
    RunSet,
    drop_max,
    format_runs,
    mask_of,
    subsets,
)


class MondayStepError(ValueError):
    """Raised for the no-Friday step applied to Monday."""


class EmptyLawError(ValueError):
    """Raised for an empty law set."""


class StepKind(enum.Enum):
    INITIAL = "initial"
    NO_FRIDAY = "no-friday"
    FINAL = "final"


@dataclass(frozen=True)
class StudentsStep:
    """One claim from the students' derivation, with its countermodel.

    ``witness`` is a run that satisfies ``axioms`` but falsifies
    ``claimed``, so the claim is not provable from the system.
    """

    kind: StepKind
    day: Run | None
    axioms: AxiomSystem
    claimed: Formula
    witness: Run | None

    def witness_is_sound(self) -> bool:
        if self.witness is None:
            return False
        return (self.witness in self.axioms.knowledge_set
                and not eval_run(self.claimed, self.witness))


def _resolved(bracket: bool, phi: Formula) -> Formula:
    """[S] -> phi with the bracket resolved and the implication simplified."""
    return phi if bracket else TOP


def students_axioms(a: AxiomSystem) -> tuple[Formula, ...]:
    """The five formulas the students treat as consequences: "some day is
    the run", and for each day after Monday, "if the system proves the
    test is by day d, the run is not d" with the bracket resolved
    against ``a``."""
    conditionals = tuple(
        _resolved(a.entails(t_le(d)), t_ne(d)) for d in DAYS[1:]
    )
    return (any_day(),) + conditionals


def check_students_collapse(a: AxiomSystem) -> bool:
    """If all five students' formulas are provable from ``a``, no day is
    surprising. True for every axiom system; the premise simply never
    combines with a nonempty surprise set."""
    if all(a.entails(phi) for phi in students_axioms(a)):
        return not surprising_days(a)
    return True


def sigma_forces_inconsistency(a: AxiomSystem) -> bool:
    """A system proving both "some day is the run" and its own surprise
    formula is inconsistent."""
    if a.entails(any_day()) and a.entails(sigma_of(a)):
        return not a.is_consistent
    return True


def _checked(step: StudentsStep) -> StudentsStep:
    if not step.witness_is_sound():
        raise RuntimeError(f"unsound witness in {step!r}")
    return step


def refute_initial_step() -> StudentsStep:
    """The initial step: from "the run is a surprising day" the students
    conclude the system proves "some day is the run". The empty system
    is a countermodel: it admits every run (so every day is a legal,
    surprising choice) yet the no-test run witnesses unprovability."""
    return _checked(StudentsStep(
        kind=StepKind.INITIAL,
        day=None,
        axioms=AxiomSystem(),
        claimed=any_day(),
        witness=Run.NONE,
    ))


def refute_no_friday_step(d: Run) -> StudentsStep:
    """The no-Friday step for day d: assuming the system proves "test by
    day d", the students conclude it proves "the run is not d". The
    system that knows exactly "test by day d" is a countermodel, with d
    itself as witness: d is a legal choice that falsifies the claim."""
    if d == Run.MO:
        raise MondayStepError(
            "the step has no countermodel for Monday: a system that pins the "
            "choice to Monday alone leaves no surprising day at all, so the "
            "assumed situation is already contradictory rather than merely "
            "unsound")
    if not d.is_day:
        raise ValueError(f"{d.label} is not a day")
    a = AxiomSystem.for_runs(frozenset(r for r in ALL_RUNS if r <= d))
    return _checked(StudentsStep(
        kind=StepKind.NO_FRIDAY,
        day=d,
        axioms=a,
        claimed=_resolved(a.entails(t_le(d)), t_ne(d)),
        witness=d,
    ))


def final_step() -> StudentsStep:
    """The students' final claim, "the run is Monday", refuted against
    the weakest system: Tuesday satisfies it and falsifies the claim."""
    return _checked(StudentsStep(
        kind=StepKind.FINAL,
        day=None,
        axioms=AxiomSystem(),
        claimed=t_eq(Run.MO),
        witness=Run.TU,
    ))


def replay_students() -> tuple[StudentsStep, ...]:
    """All steps of the derivation in the order the students take them:
    the initial step, the no-Friday step for Fr, Th, We, Tu, and the
    final claim. Every step carries a sound countermodel witness."""
    descending = (Run.FR, Run.TH, Run.WE, Run.TU)
    return (refute_initial_step(),) + tuple(
        refute_no_friday_step(d) for d in descending
    ) + (final_step(),)


class CaseTag(enum.Enum):
    REALIZABLE = "realizable"
    DEGENERATE = "degenerate"


@dataclass(frozen=True)
class LawReport:
    """Outcome of the fixed-point analysis for one law set."""

    law: RunSet
    case_tag: CaseTag
    fixed_points: tuple[RunSet, ...]
    surprising: RunSet
    rational_choices: RunSet


def analyze_law(law: RunSet) -> LawReport:
    """Solve the self-referential announcement for law set ``law``.

    A knowledge set K is a fixed point when the system for K is
    equivalent to the system for the law extended by the (closed) truth
    value of "some day is surprising under K". All 64 candidates are
    tried. Exactly one consistent fixed point exists when the law
    contains a day below its maximum; otherwise only the inconsistent
    one remains.
    """
    law = frozenset(law)
    if not law:
        raise EmptyLawError("law set must allow at least one run")

    base = AxiomSystem.for_runs(law)
    fixed_points = []
    for k in subsets():
        candidate = AxiomSystem.for_runs(k)
        if candidate.equivalent(base.extended(iverson(tau_of(candidate)))):
            fixed_points.append(k)
    fixed_points.sort(key=mask_of)

    expected = drop_max(law) & DAY_SET
    tag = CaseTag.REALIZABLE if expected else CaseTag.DEGENERATE
    consistent = [k for k in fixed_points if k]
    if tag is CaseTag.REALIZABLE:
        if consistent != [law] or surprising_days(base) != expected:
            raise RuntimeError(f"fixed-point dichotomy broken for {format_runs(law)}")
        surprising = surprising_days(base)
    else:
        if consistent:
            raise RuntimeError(f"fixed-point dichotomy broken for {format_runs(law)}")
        surprising = frozenset()

    return LawReport(
        law=law,
        case_tag=tag,
        fixed_points=tuple(fixed_points),
        surprising=surprising,
        rational_choices=surprising,
    )


@dataclass(frozen=True)
class SystemRecord:
    """One row of the 64-system table."""

    knowledge: RunSet
    surprising: RunSet
    tau: bool
    case_tag: CaseTag


def enumerate_axiom_systems() -> tuple[SystemRecord, ...]:
    """One record per run subset, in mask order.

    Systems with at least two admitted runs always leave a surprising
    day (any non-maximal one); systems with at most one admit none.
    """
    records = []
    for k in subsets():
        a = AxiomSystem.for_runs(k)
        surprising = surprising_days(a)
        if len(k) >= 2:
            tag = CaseTag.REALIZABLE
            if surprising != drop_max(k):
                raise RuntimeError(f"surprise set mismatch for {format_runs(k)}")
        else:
            tag = CaseTag.DEGENERATE
            if surprising:
                raise RuntimeError(f"surprise set mismatch for {format_runs(k)}")
        records.append(SystemRecord(
            knowledge=k,
            surprising=surprising,
            tau=tau_of(a),
            case_tag=tag,
        ))
    return tuple(records)
