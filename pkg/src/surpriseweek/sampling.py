"""Seeded random formulas and Kripke models, and the frame-law suite.

Model generation: world count uniform in [1, 5], run labels uniform,
each directed edge present with probability 1/2, then the closure
operations required by the frame class. All randomness flows from an
explicit seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .formula import (
    And,
    Atom,
    BOT,
    Box,
    Diamond,
    Formula,
    Iff,
    Implies,
    Neg,
    Or,
    TOP,
    chi,
)
from .kripke import KripkeModel, World, eval_world, submodel_at, worlds_where
from .runs import RUNS, Run, runs_of

GENERAL = "general"
PREORDER = "preorder"
EQUIVALENCE = "equivalence"
FRAME_CLASSES = (GENERAL, PREORDER, EQUIVALENCE)


def random_formula(rng: random.Random, max_depth: int = 4,
                   modal: bool = True) -> Formula:
    """A random formula of nesting depth at most ``max_depth``."""
    if max_depth <= 0:
        kind = rng.randrange(8)
        if kind < 5:
            return Atom(rng.choice(RUNS))
        if kind == 5:
            return BOT
        if kind == 6:
            return TOP
        return chi(runs_of(rng.randrange(64)))
    kind = rng.randrange(9 if modal else 7)
    if kind == 0:
        return random_formula(rng, 0, modal)
    sub = max_depth - 1
    if kind == 1:
        return Neg(random_formula(rng, sub, modal))
    if kind == 2:
        return Or(random_formula(rng, sub, modal),
                  random_formula(rng, sub, modal))
    if kind == 3:
        return And(random_formula(rng, sub, modal),
                   random_formula(rng, sub, modal))
    if kind == 4 or kind == 5:
        return Implies(random_formula(rng, sub, modal),
                       random_formula(rng, sub, modal))
    if kind == 6:
        return Iff(random_formula(rng, sub, modal),
                   random_formula(rng, sub, modal))
    if kind == 7:
        return Box(random_formula(rng, sub, modal))
    return Diamond(random_formula(rng, sub, modal))


def _closed(pairs: set[tuple[int, int]], n: int, frame: str) -> set[tuple[int, int]]:
    if frame == GENERAL:
        return pairs
    pairs = set(pairs)
    pairs.update((i, i) for i in range(n))
    if frame == EQUIVALENCE:
        pairs.update((j, i) for i, j in list(pairs))
    changed = True
    while changed:
        changed = False
        for i, j in list(pairs):
            for k, l in list(pairs):
                if j == k and (i, l) not in pairs:
                    pairs.add((i, l))
                    changed = True
    return pairs


def random_model(rng: random.Random, frame: str = GENERAL,
                 max_worlds: int = 5) -> KripkeModel:
    if frame not in FRAME_CLASSES:
        raise ValueError(f"unknown frame class {frame!r}")
    n = rng.randint(1, max_worlds)
    worlds = [World(f"w{i}", rng.choice(RUNS)) for i in range(n)]
    pairs = {(i, j) for i in range(n) for j in range(n) if rng.random() < 0.5}
    pairs = _closed(pairs, n, frame)
    edges = [(worlds[i].id, worlds[j].id) for i, j in pairs]
    return KripkeModel(worlds, edges)


# ----------------------------------------------------------------------
# Frame laws. Each law is a predicate on a sampled model (plus fresh
# random formulas); the suite counts violations across samples and keeps
# the first counterexample. The laws are chosen so that each one is a
# property the respective frame class guarantees.
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class FactCheck:
    name: str
    law: str
    frame: str
    samples: int
    violations: int
    counterexample: str | None

    @property
    def passed(self) -> bool:
        return self.violations == 0


@dataclass(frozen=True)
class FactSuiteReport:
    checks: tuple[FactCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def violations(self) -> int:
        return sum(c.violations for c in self.checks)


def _violation_k_axiom(m, rng):
    phi = random_formula(rng, 3)
    psi = random_formula(rng, 3)
    law = Implies(Box(Implies(phi, psi)), Implies(Box(phi), Box(psi)))
    for w in m.worlds:
        if not eval_world(m, w.id, law):
            return f"{law} fails at {w.id}"
    return None


def _violation_tautology(m, rng):
    phi = random_formula(rng, 2)
    psi = random_formula(rng, 2)
    for taut in (
        Implies(phi, phi),
        Or(phi, Neg(phi)),
        Implies(Implies(Implies(phi, psi), phi), phi),
    ):
        for w in m.worlds:
            if not eval_world(m, w.id, taut):
                return f"{taut} fails at {w.id}"
    return None


def _violation_modus_ponens(m, rng):
    phi = random_formula(rng, 3)
    psi = random_formula(rng, 3)
    holds_phi = worlds_where(m, phi)
    holds_imp = worlds_where(m, Implies(phi, psi))
    holds_psi = worlds_where(m, psi)
    bad = (holds_phi & holds_imp) - holds_psi
    if bad:
        return f"{phi} and {Implies(phi, psi)} without {psi} at {min(bad)}"
    return None


def _violation_necessitation(m, rng):
    phi = random_formula(rng, 3)
    if len(worlds_where(m, phi)) == len(m):
        missing = set(w.id for w in m.worlds) - worlds_where(m, Box(phi))
        if missing:
            return f"{phi} holds everywhere but {Box(phi)} fails at {min(missing)}"
    return None


def _violation_box_conjunction(m, rng):
    phi = random_formula(rng, 3)
    psi = random_formula(rng, 3)
    law = Iff(And(Box(phi), Box(psi)), Box(And(phi, psi)))
    for w in m.worlds:
        if not eval_world(m, w.id, law):
            return f"{law} fails at {w.id}"
    return None


def _violation_boxed_consequence(m, rng):
    phi = random_formula(rng, 3)
    psi = random_formula(rng, 3)
    boxed_phi = worlds_where(m, Box(phi))
    boxed_psi = worlds_where(m, Box(psi))
    if len(worlds_where(m, Implies(phi, psi))) == len(m):
        bad = boxed_phi - boxed_psi
        if bad:
            return f"global {Implies(phi, psi)} but boxed step fails at {min(bad)}"
    bad = (boxed_phi & worlds_where(m, Box(Implies(phi, psi)))) - boxed_psi
    if bad:
        return f"boxed modus ponens fails at {min(bad)}"
    return None


def _violation_submodel(m, rng):
    phi = random_formula(rng, 3)
    for w in m.worlds:
        sub = submodel_at(m, w.id)
        if eval_world(m, w.id, phi) != eval_world(sub, w.id, phi):
            return f"{phi} changes at {w.id} in the reachable submodel"
    return None


def _violation_transitive(m, rng):
    phi = random_formula(rng, 3)
    for law in (
        Implies(Box(phi), Box(Box(phi))),
        Implies(Diamond(Diamond(phi)), Diamond(phi)),
    ):
        for w in m.worlds:
            if not eval_world(m, w.id, law):
                return f"{law} fails at {w.id}"
    return None


def _reflexivity_violation(m, phi):
    for law in (Implies(Box(phi), phi), Implies(phi, Diamond(phi))):
        for w in m.worlds:
            if not eval_world(m, w.id, law):
                return f"{law} fails at {w.id}"
    return None


def _violation_reflexive(m, rng):
    return _reflexivity_violation(m, random_formula(rng, 3))


def _violation_equivalence(m, rng):
    phi = random_formula(rng, 3)
    for law in (Implies(Diamond(phi), Box(Diamond(phi))),
                Implies(Box(phi), phi)):
        for w in m.worlds:
            if not eval_world(m, w.id, law):
                return f"{law} fails at {w.id}"
    return None


def _violation_preorder_box(m, rng):
    phi = random_formula(rng, 3)
    for w in m.worlds:
        sub = submodel_at(m, w.id)
        boxed = eval_world(m, w.id, Box(phi))
        everywhere = len(worlds_where(sub, phi)) == len(sub)
        if boxed != everywhere:
            return f"{Box(phi)} at {w.id} disagrees with truth across the submodel"
    return None


def _violation_preorder_diamond(m, rng):
    phi = random_formula(rng, 3)
    for w in m.worlds:
        sub = submodel_at(m, w.id)
        possible = eval_world(m, w.id, Diamond(phi))
        witnessed = bool(worlds_where(sub, phi))
        if possible != witnessed:
            return f"{Diamond(phi)} at {w.id} disagrees with a submodel witness"
    return None


_CHECKS = (
    ("k-distribution", "[](p->q) -> ([]p -> []q)", GENERAL, _violation_k_axiom),
    ("tautology-instances", "substitution instances of tautologies hold",
     GENERAL, _violation_tautology),
    ("world-modus-ponens", "p, p->q at a world give q there",
     GENERAL, _violation_modus_ponens),
    ("necessitation", "p everywhere gives []p everywhere",
     GENERAL, _violation_necessitation),
    ("box-conjunction", "([]p & []q) <-> [](p & q)",
     GENERAL, _violation_box_conjunction),
    ("boxed-consequence", "[]p with p->q (global or boxed) gives []q",
     GENERAL, _violation_boxed_consequence),
    ("submodel-invariance", "truth at w is decided in the reachable submodel",
     GENERAL, _violation_submodel),
    ("transitive-4", "[]p -> [][]p and <><>p -> <>p on preorders",
     PREORDER, _violation_transitive),
    ("reflexive-t", "[]p -> p and p -> <>p on reflexive frames",
     PREORDER, _violation_reflexive),
    ("equivalence-5", "<>p -> []<>p (and []p -> p) on equivalence frames",
     EQUIVALENCE, _violation_equivalence),
    ("preorder-box-across-class", "[]p at w means p across the visible worlds",
     PREORDER, _violation_preorder_box),
    ("preorder-diamond-witness", "<>p at w means a visible p-world",
     PREORDER, _violation_preorder_diamond),
)


def fact_suite(sample_count: int = 500, seed: int = 0) -> FactSuiteReport:
    """Check every frame law on ``sample_count`` fresh random models."""
    results = []
    for name, law, frame, probe in _CHECKS:
        rng = random.Random(f"{seed}:{name}")
        violations = 0
        first = None
        for _ in range(sample_count):
            m = random_model(rng, frame)
            found = probe(m, rng)
            if found is not None:
                violations += 1
                if first is None:
                    first = found
        results.append(FactCheck(name, law, frame, sample_count,
                                 violations, first))
    return FactSuiteReport(tuple(results))


def broken_reflexivity_is_detected() -> bool:
    """Negative control: the reflexivity probe must flag a model with a
    missing self-loop. Keeps the suite honest."""
    m = KripkeModel(
        [World("w0", Run.MO), World("w1", Run.TU)],
        [("w0", "w1"), ("w1", "w1")],
    )
    return _reflexivity_violation(m, Atom(Run.TU)) is not None
