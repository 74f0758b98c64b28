import random

import pytest

from surpriseweek.formula import (
    And,
    Atom,
    BOT,
    Box,
    Diamond,
    Implies,
    Neg,
    TOP,
    any_day,
    big_or,
    t_eq,
    t_le,
    t_lt,
)
from surpriseweek.kripke import (
    FrameError,
    KripkeModel,
    World,
    box_signature,
    eval_world,
    submodel_at,
    standard_models,
    worlds_where,
)
from surpriseweek.knowledge import AxiomSystem, surprising_days
from surpriseweek.runs import ALL_RUNS, DAY_SET, DAYS, Run, runs_of
from surpriseweek.s5 import (
    EnumerationGuardError,
    UniversalWorld,
    check_no_box_sigma,
    choice_set,
    example_announcements,
    s5_consequence,
    s5_equivalent,
    s5_satisfiable,
    s5_valid,
    sigma,
    sigma_conditional_form,
    sigma_d,
    tau_condense,
    tau_surprising,
    universal_model,
    universal_worlds,
)
from surpriseweek.sampling import random_formula, random_model

MG, MGPLUS = standard_models()


# ----------------------------------------------------------------------
# the universal model
# ----------------------------------------------------------------------

def test_universal_world_count():
    assert len(universal_worlds()) == 192
    assert len(universal_model()) == 192


def test_universal_class_shapes():
    by_class = {}
    for uw in universal_worlds():
        by_class.setdefault(uw.visible, []).append(uw)
    assert len(by_class) == 63
    assert len(by_class[ALL_RUNS]) == 6
    for visible, members in by_class.items():
        assert {m.run for m in members} == visible


def test_universal_worlds_have_their_signature():
    m = universal_model()
    full_class = UniversalWorld(ALL_RUNS, Run.TU)
    assert box_signature(m, full_class.wid) == ALL_RUNS
    small = UniversalWorld(frozenset({Run.MO, Run.FR}), Run.FR)
    assert box_signature(m, small.wid) == {Run.MO, Run.FR}


def test_universal_model_adequacy():
    # truth in any equivalence model matches truth at the universal world
    # with the same signature and label
    rng = random.Random(99)
    m_star = universal_model()
    for _ in range(150):
        m = random_model(rng, "equivalence")
        phi = random_formula(rng, 4)
        for w in m.worlds:
            uw = UniversalWorld(box_signature(m, w.id), w.run)
            assert eval_world(m, w.id, phi) == eval_world(m_star, uw.wid, phi)


# ----------------------------------------------------------------------
# S5 decisions
# ----------------------------------------------------------------------

def test_s5_validities():
    assert s5_valid(Neg(Box(sigma())))
    assert s5_valid(Implies(Box(Atom(Run.MO)), Atom(Run.MO)))
    assert not s5_valid(sigma())
    assert s5_valid(TOP)
    assert not s5_valid(BOT)


def test_reflection_axioms_valid():
    rng = random.Random(3)
    for _ in range(50):
        phi = random_formula(rng, 3)
        assert s5_valid(Implies(phi, Diamond(phi)))
        assert s5_valid(Implies(Box(phi), phi))
        assert s5_valid(Implies(Diamond(phi), Box(Diamond(phi))))


def test_sigma_is_contingent():
    assert s5_satisfiable(sigma()) is not None
    assert s5_satisfiable(Neg(sigma())) is not None


def test_sigma_witness_is_deterministic():
    witness = s5_satisfiable(sigma())
    assert witness == UniversalWorld(frozenset({Run.MO, Run.TU}), Run.MO)
    assert eval_world(universal_model(), witness.wid, sigma())


def test_sigma_falsified_in_singleton_friday_class():
    solo = UniversalWorld(frozenset({Run.FR}), Run.FR)
    assert not eval_world(universal_model(), solo.wid, sigma())


def test_satisfiable_examples():
    assert s5_satisfiable(TOP) == UniversalWorld(frozenset({Run.MO}), Run.MO)
    assert s5_satisfiable(example_announcements()["exE"]) is None


def test_s5_consequence():
    assert s5_consequence([], Neg(Box(sigma())))
    assert s5_consequence([Box(sigma())], BOT)  # vacuous: no such world
    assert s5_consequence([Atom(Run.WE)], any_day())
    assert not s5_consequence([any_day()], Atom(Run.WE))


# ----------------------------------------------------------------------
# condensing assumption sets
# ----------------------------------------------------------------------

def test_condense_inconsistent_set():
    result = tau_condense([BOT])
    assert result.condensed == BOT
    assert result.satisfying_worlds == ()


def test_condense_empty_set():
    result = tau_condense([])
    assert len(result.satisfying_worlds) == 192
    assert s5_valid(result.condensed)


def test_condense_sigma():
    result = tau_condense([sigma()])
    expected = {
        uw for uw in universal_worlds()
        if uw.run.is_day and any(r > uw.run for r in uw.visible)
    }
    assert set(result.satisfying_worlds) == expected


def test_condense_random_sets():
    rng = random.Random(42)
    for _ in range(120):
        assumptions = [random_formula(rng, 3) for _ in range(rng.randint(0, 3))]
        result = tau_condense(assumptions)
        mask_worlds = set(result.satisfying_worlds)
        # equivalence of world sets implies both directions
        assert mask_worlds == {
            uw for uw in universal_worlds()
            if all(eval_world(universal_model(), uw.wid, phi)
                   for phi in assumptions)
        }
        for phi in assumptions:
            assert s5_valid(Implies(result.condensed, phi))


# ----------------------------------------------------------------------
# surprise formulas
# ----------------------------------------------------------------------

def test_sigma_d_shape():
    assert sigma_d(Run.WE) == And(t_eq(Run.WE), Neg(Box(t_le(Run.WE))))
    assert sigma() == big_or(sigma_d(d) for d in DAYS)
    with pytest.raises(ValueError):
        sigma_d(Run.NONE)


def test_sigma_d_at_universal_worlds():
    m = universal_model()
    late = UniversalWorld(frozenset({Run.FR, Run.NONE}), Run.FR)
    assert eval_world(m, late.wid, sigma_d(Run.FR))
    solo = UniversalWorld(frozenset({Run.FR}), Run.FR)
    assert not eval_world(m, solo.wid, sigma_d(Run.FR))


def test_sigma_forms_agree_everywhere():
    assert s5_equivalent(sigma(), sigma_conditional_form())


def test_sigma_true_on_standard_model_days():
    for d in DAYS:
        assert eval_world(MG, f"w_{d.label}", sigma())
    assert not eval_world(MG, "w_none", sigma())


# ----------------------------------------------------------------------
# surprise at a world
# ----------------------------------------------------------------------

def test_tau_surprising_standard_model():
    assert tau_surprising(MG, "w_We", TOP, Run.WE)
    assert tau_surprising(MG, "w_Fr", TOP, Run.FR)  # none-world visible
    assert not tau_surprising(MGPLUS, "w_Fr", TOP, Run.FR)


def test_tau_surprising_requires_equivalence_model():
    chain = KripkeModel(
        [World("a", Run.MO), World("b", Run.TU)],
        [("a", "a"), ("b", "b"), ("a", "b")],
    )
    with pytest.raises(FrameError):
        tau_surprising(chain, "a", TOP, Run.MO)
    with pytest.raises(ValueError):
        tau_surprising(MG, "w_Mo", TOP, Run.NONE)


def test_tau_surprising_with_nontrivial_tau():
    # tau false at the world forces "not surprising"
    assert not tau_surprising(MG, "w_We", BOT, Run.WE)
    assert tau_surprising(MG, "w_We", Diamond(Atom(Run.NONE)), Run.WE)


def test_tau_surprising_agrees_under_random_tau():
    rng = random.Random(17)
    for _ in range(150):
        m = random_model(rng, "equivalence")
        tau = random_formula(rng, 3)
        for w in m.worlds:
            for d in DAYS:
                # raises if the two criteria ever disagree
                tau_surprising(m, w.id, tau, d)


def test_propositional_modal_bridge():
    m = universal_model()
    for mask in range(1, 64):
        b = runs_of(mask)
        surprising = surprising_days(AxiomSystem.for_runs(b))
        class_model = submodel_at(m, UniversalWorld(b, min(b)).wid)
        for d in sorted(b & DAY_SET):
            modal = tau_surprising(class_model, UniversalWorld(b, d).wid,
                                   TOP, d)
            assert modal == (d in surprising)


# ----------------------------------------------------------------------
# announcements
# ----------------------------------------------------------------------

def test_choice_set_sigma():
    report = choice_set(sigma())
    assert report.days == DAY_SET
    assert report.is_announcement
    assert not report.inconsistent


def test_choice_set_examples():
    ex = example_announcements()
    b = choice_set(ex["exB"])
    assert b.days == {Run.MO, Run.WE, Run.FR} and b.is_announcement
    c = choice_set(ex["exC"])
    assert c.days == DAY_SET - {Run.FR} and c.is_announcement
    d = choice_set(ex["exD"])
    assert d.days == {Run.MO, Run.WE, Run.FR}
    assert not d.is_announcement and not d.inconsistent
    e = choice_set(ex["exE"])
    assert e.days == frozenset() and e.inconsistent
    a = choice_set(ex["exA"])
    assert a.days == DAY_SET and not a.is_announcement


def test_birthday_variant():
    report = choice_set(And(sigma(), t_eq(Run.MO)))
    assert report.days == {Run.MO}
    assert report.is_announcement and not report.inconsistent


# ----------------------------------------------------------------------
# boxed surprise is nowhere satisfiable
# ----------------------------------------------------------------------

def test_no_box_sigma_bounds():
    assert check_no_box_sigma(1)
    assert check_no_box_sigma(3)


def test_no_box_sigma_guard():
    with pytest.raises(EnumerationGuardError):
        check_no_box_sigma(5)
    with pytest.raises(ValueError):
        check_no_box_sigma(0)


def test_tampered_sigma_is_caught():
    # replacing <= by < in the per-day formula changes everything: the
    # boxed variant becomes satisfiable, so the checks have teeth
    loose = big_or(And(t_eq(d), Neg(Box(t_lt(d)))) for d in DAYS)
    assert s5_satisfiable(Box(loose)) is not None


def test_box_sigma_fails_at_every_universal_world():
    assert worlds_where(universal_model(), Box(sigma())) == frozenset()
