# tests/test_sweep.py
from types import SimpleNamespace

import pytest

from core.comparator import compare_verdicts
from core.config import RunConfig
from core.error_handler import FlagRankError, InvalidTypeError
from core.notation import format_parabolic
from core.worker import CancelledError, run_cells
from helpers import table_sweep
from helpers.table_sweep import CellResult, build_cells, sweep


def _result(computed, expected, levi=None):
    return CellResult("theorem1", "A1", "1", 3, computed, expected, "direct", 3, 3, 0, levi)


def test_run_cells_keeps_order_in_process_and_on_a_pool():
    cells = [-3, 1, -4, 1, -5, 9]
    assert run_cells(abs, cells) == [3, 1, 4, 1, 5, 9]
    assert run_cells(abs, cells, workers=2) == [3, 1, 4, 1, 5, 9]


def test_run_cells_reports_progress_and_cancels():
    seen = []
    run_cells(abs, [1, 2, 3], progress_cb=seen.append)
    assert seen == [1, 2, 3]
    with pytest.raises(CancelledError):
        run_cells(abs, [1, 2, 3], cancel_cb=lambda: len(seen) > 0)
    with pytest.raises(ValueError):
        run_cells(abs, [1], workers=0)


def test_compare_verdicts():
    results = [
        _result(True, True),
        _result(False, True),
        _result(True, None),
        _result(True, True, levi=False),
    ]
    diffs = compare_verdicts(results)
    assert diffs == [("mismatch", 1, False, True), ("inconsistent", 3, True, False)]


def test_compare_verdicts_can_be_cancelled():
    with pytest.raises(InterruptedError):
        compare_verdicts([_result(True, True)], cancel_cb=lambda: True)


def test_cell_enumeration():
    cfg = RunConfig()
    assert len(build_cells("theorem2", cfg, ["D"], [4])) == 8
    assert len(build_cells("corollary", cfg, ["B"], [3])) == 4
    # n = 3 is kept, the first predicted failure at n = 4 ends the row
    assert [c.n for c in build_cells("theorem1", cfg, ["A"], [1])] == [3, 4]


def test_rank_above_the_cap_is_refused():
    with pytest.raises(InvalidTypeError):
        build_cells("theorem1", RunConfig(max_rank=5), ["E"], [6])
    with pytest.raises(FlagRankError):
        build_cells("theorem3", RunConfig())


def test_sweep_reproduces_small_tables():
    rows, problems = sweep("theorem1", RunConfig(), ["A"], [1])
    assert [(r.n, r.computed, r.expected) for r in rows] == [(3, True, True), (4, False, False)]
    assert problems == []
    spherical, spherical_problems = sweep("corollary", RunConfig(), ["G"])
    assert [r.parabolic for r in spherical] == ["1", "2"]
    assert all(r.matches and not r.computed for r in spherical)
    assert spherical_problems == []
    assert compare_verdicts(rows + spherical) == []


def test_theorem2_rows_carry_a_levi_verdict_by_default():
    rows, problems = sweep("theorem2", RunConfig(), ["D"], [4])
    assert len(rows) == 8
    assert all(r.levi is not None and r.consistent for r in rows)
    assert problems == []
    unchecked, _ = sweep("theorem2", RunConfig(), ["D"], [4], check=False)
    assert all(r.levi is None for r in unchecked)


def _fake_evaluate(failing):
    def evaluate(cell):
        computed = (cell.I, cell.n) not in failing
        return CellResult(cell.table, str(cell.type), format_parabolic(cell.I), cell.n,
                          computed, None, "direct", 0, 0, None)
    return evaluate


def test_sweep_reports_a_verdict_lost_at_smaller_n(monkeypatch):
    monkeypatch.setattr(table_sweep, "evaluate_cell", _fake_evaluate({((0,), 3)}))
    _, problems = sweep("theorem1", RunConfig(), ["A"], [3])
    assert problems == ["A3 P{1}: transitive at n=4 but not at n=3"]


def test_sweep_checks_maximal_parabolics_of_transitive_cells(monkeypatch):
    monkeypatch.setattr(table_sweep, "evaluate_cell", _fake_evaluate(set()))
    monkeypatch.setattr(table_sweep, "is_generically_transitive",
                        lambda t, I, n, config: SimpleNamespace(transitive=False))
    _, problems = sweep("theorem2", RunConfig(), ["D"], [4])
    assert "D4 P{1,3} n=3: transitive but P{1} is not" in problems
    assert all("is not" in p for p in problems)
