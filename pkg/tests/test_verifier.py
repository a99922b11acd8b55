import dataclasses
import json

import pytest

from jspinor import verifier
from jspinor.hyperbolic import Hyperbolic
from jspinor.sequences import SeqKind, spinor_term
from jspinor.spinor import HypSpinor
from jspinor.verifier import (
    Grid, Report, Status, get_identity, list_identities, run_suite, verify_identity,
)

HOLDS = {
    "hsj-recurrence", "hsj-sum", "hsj-shift-diff", "hsj-parity-sum", "hsjl-binet",
    "hsjl-sum", "hsjl-consecutive", "hsj-hsjl-mixed", "hsjl-product", "poly-recurrence",
}
CORRECTED = {
    "hsj-binet", "hsj-genfunc", "hsj-shift-sum", "hsj-consecutive", "hsjl-genfunc",
    "hsjl-difference", "poly-binet", "poly-genfunc",
}


@pytest.fixture(scope="module")
def default_report():
    return run_suite(Grid())


def test_registry_shape():
    ids = [i.id for i in list_identities()]
    assert len(ids) == 18 == len(set(ids))
    assert ids[0] == "hsj-recurrence"
    assert set(ids) == HOLDS | CORRECTED


def test_default_grid_statuses(default_report):
    got = {e.id: e.verdict.status for e in default_report.results}
    assert {k for k, v in got.items() if v is Status.HOLDS} == HOLDS
    assert {k for k, v in got.items() if v is Status.HOLDS_CORRECTED} == CORRECTED
    assert not default_report.has_bare_failures()


def test_first_counterexamples(default_report):
    ce = {e.id: e.verdict.counterexample for e in default_report.results}
    assert ce["hsj-binet"]["params"] == {"n": 0}
    assert ce["hsj-binet"]["rhs"] == "[3u; -1/3+u]"
    assert ce["hsj-shift-sum"]["params"] == {"n": 2, "r": 1}
    assert ce["hsj-consecutive"]["params"] == {"n": 1}
    assert ce["hsjl-difference"]["params"] == {"n": 3, "r": 2}
    assert all(e.verdict.corrected_statement for e in default_report.results if e.id in CORRECTED)


def test_product_by_hand():
    h2, h1 = spinor_term(SeqKind.HSJ, 2), spinor_term(SeqKind.HSJ, 1)
    lhs = h2 * 5 + h1 * 2
    assert lhs == HypSpinor(Hyperbolic(7, 65), Hyperbolic(-17, 31)) == spinor_term(SeqKind.HSJL, 3)


def test_status_comes_from_evaluation(monkeypatch):
    reg = list(list_identities())
    idx = next(i for i, r in enumerate(reg) if r.id == "hsjl-product")
    orig = reg[idx].printed
    reg[idx] = dataclasses.replace(reg[idx], printed=lambda n: orig(n) * 2)
    monkeypatch.setattr(verifier, "_REGISTRY", tuple(reg))
    v = verify_identity("hsjl-product", Grid(6, 2, 2, 4))
    assert v.status is Status.FAILS
    assert v.counterexample["params"] == {"n": 1}


def test_failing_correction_is_reported(monkeypatch):
    reg = list(list_identities())
    idx = next(i for i, r in enumerate(reg) if r.id == "hsj-binet")
    reg[idx] = dataclasses.replace(reg[idx], corrected=reg[idx].printed)
    monkeypatch.setattr(verifier, "_REGISTRY", tuple(reg))
    report = run_suite(Grid(6, 2, 2, 4), ["hsj-binet"])
    assert report.results[0].verdict.status is Status.FAILS
    assert "corrected_counterexample" in report.results[0].verdict.counterexample
    assert report.has_bare_failures()


def test_determinism_and_round_trip():
    grid = Grid(12, 3, 3, 8)
    a = json.dumps(run_suite(grid).to_json(include_runtime=False), sort_keys=True)
    b = json.dumps(run_suite(grid, workers=4).to_json(include_runtime=False), sort_keys=True)
    assert a == b
    report = run_suite(grid)
    assert Report.from_json(json.loads(json.dumps(report.to_json()))) == report


def test_subset_keeps_requested_order():
    report = run_suite(Grid(6, 2, 2, 4), ["poly-binet", "hsj-sum"])
    assert [e.id for e in report.results] == ["poly-binet", "hsj-sum"]


def test_errors():
    with pytest.raises(ValueError):
        run_suite(Grid(), [])
    with pytest.raises(KeyError):
        get_identity("no-such-identity")
    with pytest.raises(KeyError):
        run_suite(Grid(4, 1, 1, 2), ["hsj-binet", "nope"])
    for bad in ({"n_max": -1}, {"r_max": -2}, {"order": -1}):
        with pytest.raises(ValueError):
            Grid(**bad)


def test_tiny_grid_marks_empty_domains_unchecked():
    report = run_suite(Grid(1, 1, 1, 1))
    statuses = {e.id: e.verdict.status for e in report.results}
    assert statuses["hsj-shift-sum"] is Status.NOT_CHECKED
    assert statuses["hsj-binet"] is Status.HOLDS_CORRECTED
    assert not report.has_bare_failures()


def test_grid_json():
    g = Grid(10, 2, 3, 5)
    assert Grid.from_json(g.to_json()) == g
