"""Six-run propositional semantics: entailment, knowledge sets, surprise.

Every propositional formula over the run atoms is evaluated in exactly
six models, one per run: the model for run r makes Y_r true and every
other atom false. The exactly-one-run constraint is therefore built
into the semantics and never stored as an axiom. Provability from an
axiom system is decided as semantic entailment over these six models,
which the completeness of propositional logic makes exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .formula import (
    Atom,
    Bot,
    Box,
    Formula,
    Implies,
    chi,
    iverson,
    modal_depth,
    big_and,
    t_eq,
    t_ge,
    t_le,
)
from .runs import ALL_RUNS, DAYS, RUNS, Run, RunSet, drop_max, format_runs, subsets


class ModalContextError(ValueError):
    """Raised for a modal formula in a propositional context."""


class SurprisePreconditionError(ValueError):
    """Raised when a day is not a candidate for the deduction-style check."""


def eval_run(phi: Formula, run: Run) -> bool:
    """Truth value of a propositional formula at the model of ``run``."""
    if isinstance(phi, Bot):
        return False
    if isinstance(phi, Atom):
        return phi.run == run
    if isinstance(phi, Implies):
        return not eval_run(phi.lhs, run) or eval_run(phi.rhs, run)
    if isinstance(phi, Box):
        raise ModalContextError(
            f"modal formula in propositional context: {phi}")
    raise TypeError(f"not a formula node: {phi!r}")


def models_of(phi: Formula) -> RunSet:
    """The runs satisfying ``phi``; chi(models_of(phi)) is its canonical form."""
    return frozenset(r for r in RUNS if eval_run(phi, r))


class AxiomSystem:
    """A finite set of propositional axioms over the run atoms.

    An axiom system is characterized up to equivalence by its knowledge
    set: the runs satisfying every axiom. All provability questions are
    answered from that set alone.
    """

    def __init__(self, axioms: Iterable[Formula] = ()):
        self.axioms: tuple[Formula, ...] = tuple(axioms)
        knowledge = ALL_RUNS
        for axiom in self.axioms:
            if modal_depth(axiom) != 0:
                raise ModalContextError(
                    f"modal formula in propositional context: {axiom}")
            knowledge &= models_of(axiom)
        self.knowledge_set: RunSet = knowledge

    @classmethod
    def for_runs(cls, runs: Iterable[Run]) -> "AxiomSystem":
        """The canonical system whose knowledge set is ``runs``."""
        return cls((chi(runs),))

    @property
    def is_consistent(self) -> bool:
        return bool(self.knowledge_set)

    def entails(self, phi: Formula) -> bool:
        """Provability of ``phi`` from this system, decided semantically."""
        return self.knowledge_set <= models_of(phi)

    def equivalent(self, other: "AxiomSystem") -> bool:
        return self.knowledge_set == other.knowledge_set

    def extended(self, *extra: Formula) -> "AxiomSystem":
        return AxiomSystem(self.axioms + extra)

    def __repr__(self) -> str:
        return f"AxiomSystem(knowledge={format_runs(self.knowledge_set)})"


def canonical_systems() -> Iterator[AxiomSystem]:
    """The 64 pairwise non-equivalent systems, one per run subset, in mask order."""
    for runs in subsets():
        yield AxiomSystem.for_runs(runs)


def surprising_days(a: AxiomSystem) -> RunSet:
    """Days d with d in the knowledge set but "test is by day d" unprovable."""
    return frozenset(
        d for d in DAYS
        if d in a.knowledge_set and not a.entails(t_le(d))
    )


def is_surprising_by_deduction(a: AxiomSystem, d: Run) -> bool:
    """Deduction-theorem form: after observing that days before d have
    passed, the exact day still cannot be proved.

    Requires d to be a day inside the knowledge set; agrees with
    membership in ``surprising_days(a)`` on its domain.
    """
    if not d.is_day:
        raise SurprisePreconditionError(f"{d.label} is not a day")
    if d not in a.knowledge_set:
        raise SurprisePreconditionError(
            f"{d.label} is not in the knowledge set {format_runs(a.knowledge_set)}")
    return not a.extended(t_ge(d)).entails(t_eq(d))


def sigma_of(a: AxiomSystem, simplified: bool = False) -> Formula:
    """The surprise formula of ``a``: its day-models are exactly the
    surprising days.

    One conjunct per run subset K, in mask order: a provability bracket,
    resolved eagerly to true/false against the knowledge set, implying
    "the run is in K minus its maximum". With ``simplified``, conjuncts
    whose bracket is false are dropped and the true bracket is elided.
    """
    conjuncts = []
    for k in subsets():
        is_knowledge_set = a.knowledge_set <= k
        body = chi(drop_max(k))
        if simplified:
            if is_knowledge_set:
                conjuncts.append(body)
        else:
            conjuncts.append(Implies(iverson(is_knowledge_set), body))
    return big_and(conjuncts)


def tau_of(a: AxiomSystem) -> bool:
    """Closed truth value of "some day is surprising under ``a``".

    Evaluated literally as a five-fold disjunction over days of 64
    bracket implications, each bracket a meta-level truth value.
    """
    return any(
        all(
            not (a.knowledge_set <= k) or d in drop_max(k)
            for k in subsets()
        )
        for d in DAYS
    )


@dataclass(frozen=True)
class SurpriseProfile:
    """Knowledge set, surprising days, surprise formula, and the
    existence value for one axiom system."""

    knowledge: RunSet
    surprising: RunSet
    sigma: Formula
    tau_holds: bool


def surprise_profile(a: AxiomSystem) -> SurpriseProfile:
    return SurpriseProfile(
        knowledge=a.knowledge_set,
        surprising=surprising_days(a),
        sigma=sigma_of(a, simplified=True),
        tau_holds=tau_of(a),
    )
