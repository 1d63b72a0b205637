import io
import json
import subprocess
import sys

import pytest

from knotdelta import cli
from knotdelta.diagram import build_En, is_isomorphic, kink, parse_pd, serialize_pd
from knotdelta.moves import enumerate_moves


def run(argv, stdin="", capsys=None, monkeypatch=None):
    monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def knotdelta(capsys, monkeypatch):
    def call(*argv, stdin=""):
        return run(list(argv), stdin, capsys, monkeypatch)
    return call


def js(out):
    return json.loads(out)["result"]


def test_invariant_family(knotdelta, tmp_path):
    code, out, _ = knotdelta("family", "3", "Dn")
    assert code == 0
    pd = out.strip()
    assert parse_pd(pd).n == 7
    path = tmp_path / "d3.pd"
    path.write_text(pd)
    code, out, _ = knotdelta("invariant", str(path))
    assert code == 0 and "I_lk = 4Y_0 + 3X_-1" in out


def test_invariant_empty(knotdelta):
    code, out, _ = knotdelta("--format", "json", "invariant", stdin="PD[]")
    assert code == 0
    assert js(out) == {"I_lk": "0", "writhe": 0, "crossing_number": 0, "H": 0}


def test_invariant_trefoil(knotdelta):
    pd = serialize_pd(parse_pd("PD[X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)]"))
    code, out, _ = knotdelta("invariant", "--format", "json", stdin="PD[X(1,5,2,4),X(3,1,4,6),X(5,3,6,2)]")
    res = js(out)
    assert (res["I_lk"], res["writhe"], res["H"]) == ("3X_1", 3, -3)
    code, out, _ = knotdelta("invariant", "--format", "json", stdin=pd)
    assert js(out)["I_lk"] == "3Y_-1"


def test_parse_errors(knotdelta):
    assert knotdelta("invariant", stdin="PD[X(1,4,2,3)]")[0] == 2
    assert knotdelta("c2", stdin="nonsense")[0] == 2
    assert knotdelta("rlength", "3Z_0")[0] == 2


def test_usage_errors(knotdelta):
    with pytest.raises(SystemExit) as exc:
        knotdelta("frobnicate")
    assert exc.value.code == 1
    with pytest.raises(SystemExit) as exc:
        knotdelta("family", "2", "Fn")
    assert exc.value.code == 1
    assert knotdelta("family", "-1", "Dn")[0] == 1
    assert knotdelta("invariant", "/no/such/file")[0] == 1
    assert knotdelta("verify")[0] == 1


def test_moves_on_kink(knotdelta):
    code, out, _ = knotdelta("moves", "--format", "json", stdin="PD[X(1,2,2,1)]")
    rem = [m for m in js(out)["moves"] if m["kind"] == "R1-remove"]
    assert code == 0 and len(rem) == 1
    assert rem[0]["delta_text"] in ("-X_0", "-Y_0")


def test_apply_sequence(knotdelta, tmp_path):
    code, out, _ = knotdelta("--format", "json", "family", "2", "sequence")
    seq = js(out)
    assert len(seq["moves"]) == 6
    moves = tmp_path / "seq.json"
    moves.write_text(json.dumps(seq["moves"]))
    code, out, _ = knotdelta("apply", "--format", "json", "--move", str(moves), stdin=seq["start"])
    res = js(out)
    assert code == 0 and len(res["steps"]) == 6
    assert is_isomorphic(parse_pd(res["result"]), build_En(2))
    assert res["delta"] == "3X_0 + 2Y_1 - 3Y_0 - 2X_-1"


def test_apply_single_and_stale(knotdelta):
    (m,) = [m for m in enumerate_moves(kink(1)) if m.kind == "R1-remove"]
    code, out, _ = knotdelta("apply", "--format", "json", "--move", m.to_json(),
                             stdin=serialize_pd(kink(1)))
    assert code == 0 and js(out)["result"] == "PD[]"
    code, _, err = knotdelta("apply", "--move", m.to_json(), stdin="PD[]")
    assert code == 4 and "inapplicable" in err
    assert knotdelta("apply", "--move", "{not json", stdin="PD[]")[0] == 2


def test_rlength(knotdelta):
    code, out, _ = knotdelta("rlength", "--format", "json", "2X_0 + Y_1 - 2Y_0 - X_-1")
    assert code == 0
    assert js(out) == {"element": "2X_0 + Y_1 - 2Y_0 - X_-1", "lower_bound": 4,
                       "certificate": "g", "exact": 4, "limit_hit": False}
    assert js(knotdelta("rlength", "--format", "json", "X_0")[1])["exact"] == 1
    code, out, _ = knotdelta("rlength", "--format", "json", "--bound-only",
                             "11X_0 + 10Y_1 - 11Y_0 - 10X_-1")
    assert code == 0 and js(out)["lower_bound"] == 22 and js(out)["exact"] is None
    code, out, _ = knotdelta("rlength", "--format", "json", "--limit", "3",
                             stdin="2X_0 + Y_1 - 2Y_0 - X_-1")
    assert code == 3 and js(out)["limit_hit"] is True


def test_family_outputs(knotdelta):
    assert len(js(knotdelta("--format", "json", "family", "0", "sequence")[1])["moves"]) == 2
    d5 = parse_pd(knotdelta("family", "5", "Dn")[1])
    e5 = parse_pd(knotdelta("family", "5", "En")[1])
    from knotdelta.diagram import mirror
    assert is_isomorphic(mirror(d5), e5)


def test_c2_and_arnold(knotdelta):
    trefoil = "PD[X(1,5,2,4),X(3,1,4,6),X(5,3,6,2)]"
    code, out, _ = knotdelta("--format", "json", "arnold", stdin=trefoil)
    assert js(out) == {"c2": 1, "H": -3, "A": 1}
    code, out, _ = knotdelta("arnold", stdin=trefoil)
    assert "H (negative cowrithe) = -3" in out
    code, out, _ = knotdelta("c2", stdin="PD[]")
    assert out.strip() == "c2 = 0"


def test_verify_files(knotdelta, tmp_path):
    empty = tmp_path / "empty.txt"
    empty.write_text("")
    code, out, _ = knotdelta("--format", "json", "verify", str(empty))
    assert code == 0 and js(out)["total_checks"] == 0
    (m,) = [m for m in enumerate_moves(kink(1)) if m.kind == "R1-remove"]
    bad = tmp_path / "bad.txt"
    bad.write_text(json.dumps({"pd": serialize_pd(kink(1)), "moves": [m.to_dict(-kink_delta())]}))
    code, out, _ = knotdelta("verify", str(bad))
    assert code == 5 and "counterexample" in out


def kink_delta():
    from knotdelta.group import Y
    return Y(0)  # the wrong sign: removing a positive kink subtracts X_0


def test_json_is_byte_stable(knotdelta):
    a = knotdelta("--format", "json", "moves", stdin="PD[X(1,2,2,1)]")[1]
    b = knotdelta("--format", "json", "moves", stdin="PD[X(1,2,2,1)]")[1]
    assert a == b


def test_console_script_runs():
    out = subprocess.run([sys.executable, "-m", "knotdelta.cli", "rlength", "X_0"],
                         capture_output=True, text=True)
    assert out.returncode == 0 and "exact = 1" in out.stdout
