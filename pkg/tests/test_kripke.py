import json
import random

import pytest

from surpriseweek.formula import Atom, BOT, Box, Diamond, Implies, Neg, TOP
from surpriseweek.kripke import (
    FrameError,
    KripkeModel,
    ModelFormatError,
    UnknownWorldError,
    World,
    box_signature,
    equivalence_classes,
    eval_world,
    frame_properties,
    model_from_json,
    model_to_dot,
    model_to_json,
    restrict_ge,
    standard_models,
    submodel_at,
    worlds_where,
)
from surpriseweek.runs import ALL_RUNS, DAY_SET, Run
from surpriseweek.sampling import random_formula, random_model


MG, MGPLUS = standard_models()


def test_standard_model_shapes():
    assert len(MG) == 6 and len(MG.edges) == 36
    assert len(MGPLUS) == 5 and len(MGPLUS.edges) == 25
    assert frame_properties(MG).equivalence
    assert frame_properties(MGPLUS).equivalence


def test_atom_truth_from_labels():
    assert eval_world(MG, "w_We", Atom(Run.WE))
    assert not eval_world(MG, "w_We", Atom(Run.TH))
    # exactly one atom true per world
    for w in MG.worlds:
        assert sum(eval_world(MG, w.id, Atom(r)) for r in ALL_RUNS) == 1


def test_box_over_complete_model():
    assert not eval_world(MG, "w_We", Box(Atom(Run.WE)))
    assert eval_world(MG, "w_We", Diamond(Atom(Run.NONE)))
    assert eval_world(MG, "w_We", Neg(Box(Implies(Atom(Run.NONE), BOT))))


def test_single_reflexive_world():
    m = KripkeModel([World("w", Run.MO)], [("w", "w")])
    assert eval_world(m, "w", Box(Atom(Run.MO)))


def test_vacuous_box_at_dead_end():
    m = KripkeModel([World("w", Run.MO)], [])
    assert eval_world(m, "w", Box(BOT))
    assert not eval_world(m, "w", Diamond(TOP))


def test_unknown_world():
    with pytest.raises(UnknownWorldError):
        eval_world(MG, "w_Sat", TOP)
    with pytest.raises(UnknownWorldError):
        MG.world("nope")


def test_duplicate_ids_rejected():
    with pytest.raises(ValueError):
        KripkeModel([World("w", Run.MO), World("w", Run.TU)], [])


def test_edges_must_stay_inside():
    with pytest.raises(ValueError):
        KripkeModel([World("w", Run.MO)], [("w", "v")])


def test_frame_properties_cases():
    chain = KripkeModel(
        [World("a", Run.MO), World("b", Run.TU)],
        [("a", "a"), ("b", "b"), ("a", "b")],
    )
    props = frame_properties(chain)
    assert props.reflexive and props.transitive and not props.symmetric
    assert not props.equivalence

    bare = KripkeModel([World("a", Run.MO)], [])
    assert not frame_properties(bare).reflexive

    assert frame_properties(MG) == frame_properties(MG)


def test_worlds_where():
    assert worlds_where(MG, Atom(Run.MO)) == {"w_Mo"}
    assert worlds_where(MGPLUS, Diamond(Atom(Run.NONE))) == frozenset()


def test_submodel_of_single_class_is_whole_model():
    for w in MG.worlds:
        sub = submodel_at(MG, w.id)
        assert {u.id for u in sub.worlds} == {u.id for u in MG.worlds}
        assert sub.edges == MG.edges


def test_submodel_of_isolated_world():
    worlds = [World(w.id, w.run) for w in MG.worlds] + [World("island", Run.MO)]
    edges = list(MG.edges) + [("island", "island")]
    m = KripkeModel(worlds, edges)
    sub = submodel_at(m, "island")
    assert [w.id for w in sub.worlds] == ["island"]


def test_submodel_includes_start_without_self_loop():
    m = KripkeModel([World("a", Run.MO), World("b", Run.TU)], [("a", "b")])
    sub = submodel_at(m, "a")
    assert {w.id for w in sub.worlds} == {"a", "b"}


def test_submodel_preserves_satisfaction():
    rng = random.Random(7)
    for _ in range(200):
        m = random_model(rng, "general")
        phi = random_formula(rng, 4)
        for w in m.worlds:
            sub = submodel_at(m, w.id)
            assert eval_world(m, w.id, phi) == eval_world(sub, w.id, phi)


def test_restrict_ge():
    assert {w.id for w in restrict_ge(MG, Run.WE).worlds} == {
        "w_We", "w_Th", "w_Fr", "w_none"}
    assert {w.id for w in restrict_ge(MG, Run.MO).worlds} == {
        w.id for w in MG.worlds}
    assert [w.id for w in restrict_ge(MGPLUS, Run.FR).worlds] == ["w_Fr"]
    with pytest.raises(ValueError):
        restrict_ge(MG, Run.NONE)


def test_restrict_ge_can_empty_out():
    m = KripkeModel([World("w", Run.MO)], [("w", "w")])
    assert restrict_ge(m, Run.TU).is_empty


def test_box_signature():
    assert box_signature(MG, "w_Tu") == ALL_RUNS
    assert box_signature(MGPLUS, "w_Fr") == DAY_SET
    chain = KripkeModel(
        [World("a", Run.MO), World("b", Run.TU)],
        [("a", "a"), ("b", "b"), ("a", "b")],
    )
    with pytest.raises(FrameError):
        box_signature(chain, "a")


def test_equivalence_classes():
    assert equivalence_classes(MG) == ({w.id for w in MG.worlds},)
    two = KripkeModel(
        [World("a", Run.MO), World("b", Run.TU)],
        [("a", "a"), ("b", "b")],
    )
    assert equivalence_classes(two) == (frozenset({"a"}), frozenset({"b"}))


# ----------------------------------------------------------------------
# serialization
# ----------------------------------------------------------------------

def test_json_round_trip():
    data = model_to_json(MG)
    again = model_from_json(data)
    assert model_to_json(again) == data
    assert json.dumps(model_to_json(again)) == json.dumps(data)


def test_json_shape():
    data = model_to_json(MGPLUS)
    assert [w["id"] for w in data["worlds"]] == [
        "w_Mo", "w_Tu", "w_We", "w_Th", "w_Fr"]
    assert data["worlds"][0] == {"id": "w_Mo", "run": "Mo"}
    assert len(data["edges"]) == 25
    assert data["edges"][0] == ["w_Mo", "w_Mo"]


def test_json_strictness():
    good = model_to_json(MGPLUS)
    with pytest.raises(ModelFormatError):
        model_from_json({**good, "extra": 1})
    with pytest.raises(ModelFormatError):
        model_from_json({"worlds": good["worlds"]})
    with pytest.raises(ModelFormatError):
        model_from_json({
            "worlds": [{"id": "w", "run": "Mo", "color": "red"}],
            "edges": [],
        })
    with pytest.raises(ModelFormatError):
        model_from_json({
            "worlds": [{"id": "w", "run": "Saturday"}],
            "edges": [],
        })
    with pytest.raises(ModelFormatError):
        model_from_json({
            "worlds": [{"id": "w", "run": "Mo"}],
            "edges": [["w", "gone"]],
        })
    with pytest.raises(ModelFormatError):
        model_from_json({
            "worlds": [{"id": "w", "run": "Mo"}, {"id": "w", "run": "Tu"}],
            "edges": [],
        })
    with pytest.raises(ModelFormatError):
        model_from_json([1, 2, 3])


def test_dot_export():
    dot = model_to_dot(MG)
    lines = dot.strip().splitlines()
    assert lines[0] == "digraph {"
    assert lines[-1] == "}"
    assert sum("label=" in line for line in lines) == 6
    assert sum("->" in line for line in lines) == 36
    assert '  "w_Mo" -> "w_Mo";' in lines  # self-loops included
    assert '  "w_We" [label="w_We:We"];' in lines
