import pytest

from surpriseweek.runs import (
    ALL_RUNS,
    DAY_SET,
    DAYS,
    RUNS,
    Run,
    drop_max,
    format_runs,
    mask_of,
    parse_run_set,
    runs_of,
    subsets,
)


def test_total_order():
    assert list(RUNS) == sorted(RUNS)
    assert Run.MO < Run.TU < Run.WE < Run.TH < Run.FR < Run.NONE
    for a in RUNS:
        for b in RUNS:
            if a <= b and b <= a:
                assert a == b


def test_days_are_all_but_none():
    assert DAY_SET == ALL_RUNS - {Run.NONE}
    assert all(d.is_day for d in DAYS)
    assert not Run.NONE.is_day


def test_successor_and_predecessor():
    for d in DAYS:
        assert d.successor() == Run(d + 1)
    assert Run.FR.successor() == Run.NONE
    with pytest.raises(ValueError):
        Run.NONE.successor()
    for r in RUNS:
        if r > Run.MO:
            assert r.predecessor() == Run(r - 1)
    with pytest.raises(ValueError):
        Run.MO.predecessor()


def test_labels_round_trip():
    for r in RUNS:
        assert Run.from_label(r.label) == r
    with pytest.raises(ValueError):
        Run.from_label("Su")


def test_masks_round_trip():
    seen = set()
    for runs in subsets():
        mask = mask_of(runs)
        assert runs_of(mask) == runs
        seen.add(mask)
    assert seen == set(range(64))


def test_drop_max():
    assert drop_max(frozenset()) == frozenset()
    assert drop_max(frozenset({Run.WE})) == frozenset()
    assert drop_max(frozenset({Run.TU, Run.TH})) == {Run.TU}
    assert drop_max(ALL_RUNS) == DAY_SET


def test_format_runs():
    assert format_runs(frozenset()) == "{}"
    assert format_runs({Run.WE, Run.MO}) == "{Mo,We}"
    assert format_runs(ALL_RUNS) == "{Mo,Tu,We,Th,Fr,none}"


def test_parse_run_set():
    assert parse_run_set("R") == ALL_RUNS
    assert parse_run_set("D") == DAY_SET
    assert parse_run_set("{Mo,none}") == {Run.MO, Run.NONE}
    assert parse_run_set("Mo, We") == {Run.MO, Run.WE}
    assert parse_run_set("{}") == frozenset()
    with pytest.raises(ValueError):
        parse_run_set("{Mo,Su}")
    with pytest.raises(ValueError):
        parse_run_set("{Mo")
