"""S5 decisions via the universal equivalence model.

Over the six-atom language, every pointed modal theory of an equivalence
model is realized in one finite model: worlds are the pairs (B, r) with
r in a nonempty B, a world sees exactly the worlds with the same B, and
its label is r. That gives 192 worlds in 63 classes, and a formula is
S5-valid exactly when it holds at all 192 worlds. All decision
procedures here are sweeps over this model.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable

from .formula import (
    And,
    Box,
    Diamond,
    Formula,
    Implies,
    Neg,
    TOP,
    any_day,
    big_and,
    big_or,
    chi,
    t_eq,
    t_gt,
    t_le,
)
from .kripke import (
    FrameError,
    KripkeModel,
    World,
    box_signature,
    eval_world,
    restrict_ge,
    sat_mask,
)
from .runs import DAYS, RUNS, Run, RunSet, mask_of, runs_of


class EnumerationGuardError(RuntimeError):
    """Raised when the bounded frame enumeration would blow up."""


@dataclass(frozen=True)
class UniversalWorld:
    """A world (B, r) of the universal model: label r, class labels B."""

    visible: RunSet
    run: Run

    @property
    def wid(self) -> str:
        return ",".join(r.label for r in sorted(self.visible)) + "/" + self.run.label


@lru_cache(maxsize=1)
def universal_worlds() -> tuple[UniversalWorld, ...]:
    """All 192 worlds, sorted by class (mask order) then by run."""
    worlds = []
    for mask in range(1, 64):
        visible = runs_of(mask)
        for r in sorted(visible):
            worlds.append(UniversalWorld(visible, r))
    return tuple(worlds)


@lru_cache(maxsize=1)
def universal_model() -> KripkeModel:
    worlds = [World(uw.wid, uw.run) for uw in universal_worlds()]
    edges = []
    for a in universal_worlds():
        for b in universal_worlds():
            if a.visible == b.visible:
                edges.append((a.wid, b.wid))
    return KripkeModel(worlds, edges)


@lru_cache(maxsize=1)
def _worlds_by_id() -> dict[str, UniversalWorld]:
    return {uw.wid: uw for uw in universal_worlds()}


def universal_world(wid: str) -> UniversalWorld:
    return _worlds_by_id()[wid]


def _uw_mask(phi: Formula) -> int:
    return sat_mask(universal_model(), phi)


_FULL = None


def _full_mask() -> int:
    global _FULL
    if _FULL is None:
        _FULL = (1 << len(universal_worlds())) - 1
    return _FULL


def s5_valid(phi: Formula) -> bool:
    """True when ``phi`` holds at all 192 universal worlds."""
    return _uw_mask(phi) == _full_mask()


def s5_satisfiable(phi: Formula) -> UniversalWorld | None:
    """A witness world satisfying ``phi``, or None; the first in class
    order, so the witness is deterministic."""
    mask = _uw_mask(phi)
    if not mask:
        return None
    return universal_worlds()[(mask & -mask).bit_length() - 1]


def s5_equivalent(a: Formula, b: Formula) -> bool:
    return _uw_mask(a) == _uw_mask(b)


def _assumption_mask(assumptions: Iterable[Formula]) -> int:
    mask = _full_mask()
    for phi in assumptions:
        mask &= _uw_mask(phi)
    return mask


def s5_consequence(assumptions: Iterable[Formula], phi: Formula) -> bool:
    """Local consequence: ``phi`` holds at every universal world
    satisfying all assumptions."""
    return not _assumption_mask(assumptions) & ~_uw_mask(phi)


# ----------------------------------------------------------------------
# Condensing a set of assumptions into one formula with the same worlds.
# ----------------------------------------------------------------------

@lru_cache(maxsize=None)
def _box_guard(mask: int) -> Formula:
    return Box(chi(runs_of(mask)))


@lru_cache(maxsize=None)
def _all_seen(mask: int) -> Formula:
    return big_and(Diamond(t_eq(s)) for s in sorted(runs_of(mask)))


def world_description(uw: UniversalWorld) -> Formula:
    """A formula satisfied by exactly the worlds equivalent to ``uw``:
    its own label, only its class labels visible, and all of them seen."""
    mask = mask_of(uw.visible)
    return And(t_eq(uw.run), And(_box_guard(mask), _all_seen(mask)))


@dataclass(frozen=True)
class Condensation:
    """A finite assumption set squeezed into a single formula."""

    source: tuple[Formula, ...]
    condensed: Formula
    satisfying_worlds: tuple[UniversalWorld, ...]


def tau_condense(assumptions: Iterable[Formula]) -> Condensation:
    """Build the disjunction of world descriptions over the worlds that
    satisfy all assumptions. The result holds at exactly those worlds,
    which is re-checked against the universal model before returning:
    the assumptions entail it, and it entails each assumption."""
    source = tuple(assumptions)
    mask = _assumption_mask(source)
    selected = tuple(
        uw for i, uw in enumerate(universal_worlds()) if mask & (1 << i))
    condensed = big_or(world_description(uw) for uw in selected)

    condensed_mask = _uw_mask(condensed)
    if condensed_mask != mask:
        raise RuntimeError("condensed formula does not match its world set")
    if any(condensed_mask & ~_uw_mask(phi) for phi in source):
        raise RuntimeError("condensed formula does not entail an assumption")
    return Condensation(source, condensed, selected)


# ----------------------------------------------------------------------
# Surprise as a modal formula.
# ----------------------------------------------------------------------

@lru_cache(maxsize=None)
def sigma_d(d: Run) -> Formula:
    """Test on day d, and "the test is by day d" is not known."""
    if not d.is_day:
        raise ValueError(f"{d.label} is not a day")
    return And(t_eq(d), Neg(Box(t_le(d))))


@lru_cache(maxsize=1)
def sigma() -> Formula:
    """Some day's test is surprising."""
    return big_or(sigma_d(d) for d in DAYS)


def sigma_conditional_form() -> Formula:
    """Equivalent shape of ``sigma``: a test happens, and whichever day
    it is on, that day's test is surprising."""
    return And(t_le(Run.FR),
               big_and(Implies(t_eq(d), sigma_d(d)) for d in DAYS))


def tau_surprising(m: KripkeModel, wid: str, tau: Formula, d: Run) -> bool:
    """Is there a tau-surprising test on day ``d`` in world ``wid``?

    Decided by the formula criterion (tau holds, the label is d, a later
    run is considered possible) and, independently, by the definition:
    after the days before d have passed, some equivalence model has a
    later-run world whose box theory of the restriction matches, where
    matching is equality of restricted box signatures and the search
    ranges over the universal classes. Both answers must agree.
    """
    if not d.is_day:
        raise ValueError(f"{d.label} is not a day")
    if not m.is_equivalence:
        raise FrameError("surprise is defined over equivalence models")

    via_formula = eval_world(m, wid, And(tau, And(t_eq(d), Diamond(t_gt(d)))))

    via_definition = False
    if m.run_of(wid) == d and eval_world(m, wid, tau):
        signature = box_signature(restrict_ge(m, d), wid)
        for uw in universal_worlds():
            if uw.run <= d:
                continue
            if frozenset(s for s in uw.visible if s >= d) == signature:
                via_definition = True
                break

    if via_formula != via_definition:
        raise RuntimeError(
            f"surprise criteria disagree at {wid!r} for {d.label}")
    return via_formula


# ----------------------------------------------------------------------
# Announcements and the teacher's choice set.
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class ChoiceReport:
    """Days on which the announcement can come true, plus defect flags.

    ``is_announcement`` is false when the formula does not promise a
    surprising test; ``inconsistent`` is true when no world satisfies it
    at all (the students must then discard it completely).
    """

    days: RunSet
    is_announcement: bool
    inconsistent: bool


def choice_set(alpha: Formula) -> ChoiceReport:
    days = frozenset(
        d for d in DAYS if s5_satisfiable(And(alpha, t_eq(d))) is not None)
    return ChoiceReport(
        days=days,
        is_announcement=s5_valid(Implies(alpha, sigma())),
        inconsistent=s5_valid(Neg(alpha)),
    )


@lru_cache(maxsize=1)
def example_announcements() -> dict[str, Formula]:
    """Five illustrative announcements, from plain silence to an
    inconsistent promise; exA..exE are also the CLI macro names."""
    pinned = big_or(Box(t_eq(d)) for d in (Run.MO, Run.WE, Run.FR))
    return {
        "exA": TOP,
        "exB": And(sigma(), chi({Run.MO, Run.WE, Run.FR})),
        "exC": And(sigma(), Box(any_day())),
        "exD": pinned,
        "exE": And(sigma(), pinned),
    }


# ----------------------------------------------------------------------
# "It is known that a surprising test is coming" holds nowhere: checked
# on the universal model and, within a world bound, on every preorder.
# ----------------------------------------------------------------------

def _preorders(n: int) -> list[list[tuple[int, int]]]:
    """All reflexive transitive relations on n points."""
    loops = [(i, i) for i in range(n)]
    free = [(i, j) for i in range(n) for j in range(n) if i != j]
    relations = []
    for bits in range(1 << len(free)):
        chosen = [free[k] for k in range(len(free)) if bits & (1 << k)]
        succ = [1 << i for i in range(n)]
        for i, j in chosen:
            succ[i] |= 1 << j
        if all(
            not succ[j] & ~succ[i]
            for i in range(n)
            for j in range(n)
            if succ[i] & (1 << j)
        ):
            relations.append(loops + chosen)
    return relations


def check_no_box_sigma(max_worlds: int = 3, allow_large: bool = False) -> bool:
    """No world can know that a surprising test is coming.

    Part one sweeps the universal model (equivalence frames). Part two
    exhaustively enumerates every preorder model with up to
    ``max_worlds`` worlds under every run labeling and looks for a
    world where the boxed surprise formula holds. Bounds above 4 are
    refused unless ``allow_large`` is set.
    """
    if max_worlds < 1:
        raise ValueError("max_worlds must be at least 1")
    if max_worlds > 4 and not allow_large:
        raise EnumerationGuardError(
            f"enumerating all preorders on {max_worlds} worlds is "
            "prohibitively large; pass allow_large to force it")

    boxed = Box(sigma())
    if _uw_mask(boxed):
        return False

    for n in range(1, max_worlds + 1):
        ids = [f"w{i}" for i in range(n)]
        for relation in _preorders(n):
            edges = [(ids[i], ids[j]) for i, j in relation]
            for labels in product(RUNS, repeat=n):
                m = KripkeModel(
                    (World(ids[i], labels[i]) for i in range(n)), edges)
                if sat_mask(m, boxed):
                    return False
    return True
