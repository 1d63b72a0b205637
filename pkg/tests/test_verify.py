import json

from knotdelta.diagram import kink, serialize_pd
from knotdelta.moves import enumerate_moves
from knotdelta.verify import builtin_entries, load_corpus, run_suites


def _kink_line(delta):
    (m,) = [m for m in enumerate_moves(kink(-1)) if m.kind == "R1-remove"]
    rec = m.to_dict()
    rec["delta"] = delta
    return json.dumps({"name": "kink", "pd": serialize_pd(kink(-1)), "moves": [rec]})


def test_empty_corpus():
    report = run_suites(load_corpus("# nothing here\n\n"))
    assert report.ok and report.total_checks == 0


def test_builtin_corpus_passes():
    report = run_suites(builtin_entries())
    assert report.ok, report.first_violation()
    props = report.to_dict()["properties"]
    assert props["move-delta classification"]["checks"] >= 500
    assert props["order one (disjoint moves commute)"]["checks"] >= 200


def test_recorded_delta_checked():
    good = run_suites(load_corpus(_kink_line([["Y", 0, -1]])))
    assert good.ok
    bad = run_suites(load_corpus(_kink_line([["X", 0, -1]])))
    assert not bad.ok
    cx = bad.first_violation()
    assert cx["property"] == "recorded deltas"
    assert cx["computed"] == "-Y_0" and cx["recorded"] == "-X_0"


def test_plain_pd_lines():
    entries = load_corpus("PD[X(1,2,2,1)]\nPD[]\n")
    assert [e.diagram.n for e in entries] == [1, 0]


def test_deterministic():
    entries = builtin_entries(3)[-6:]
    a = run_suites(entries, seed=3).to_dict()
    b = run_suites(entries, seed=3).to_dict()
    assert a == b
