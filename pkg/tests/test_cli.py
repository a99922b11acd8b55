import csv
import io
import json
from fractions import Fraction

import pytest

from jspinor.cli import LEGEND, decode_terms, encode_terms, run
from jspinor.sequences import SeqKind, spinor_poly_term, spinor_term, split_quat_seq
from jspinor.series import TruncatedSeries, gen_function_series
from jspinor.verifier import Report


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_gen_pretty_exact_lines():
    code, out, err = call("gen", "--seq", "hsj", "--from", "0", "--to", "2")
    assert code == 0
    assert out.splitlines() == ["[3u; -1+u]", "[1+5u; -1+3u]", "[1+11u; -3+5u]"]
    assert LEGEND in err


def test_gen_integers():
    _, out, err = call("gen", "--seq", "jl", "--to", "5")
    assert out.split() == ["2", "1", "5", "7", "17", "31"]
    assert err == ""


@pytest.mark.parametrize("seq", ["hsj", "hsjl", "j", "jl", "sjq", "sjlq"])
def test_gen_json_round_trip(seq):
    code, out, _ = call("gen", "--seq", seq, "--from", "3", "--to", "70", "--format", "json")
    assert code == 0
    data = json.loads(out)
    terms = decode_terms(data)
    assert [n for n, _ in terms] == list(range(3, 71))
    assert encode_terms(seq, terms) == data


def test_gen_json_values_are_strings():
    _, out, _ = call("gen", "--seq", "j", "--from", "80", "--to", "80", "--format", "json")
    value = json.loads(out)["terms"][0]["value"]
    assert value == str((2 ** 80 - 1) // 3)


def test_csv_and_json_agree():
    _, js, _ = call("gen", "--seq", "hsjl", "--to", "6", "--format", "json")
    _, cs, _ = call("gen", "--seq", "hsjl", "--to", "6", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(cs)))
    for row, item in zip(rows, json.loads(js)["terms"]):
        v = item["value"]
        assert [row["c1_re"], row["c1_hy"], row["c2_re"], row["c2_hy"]] == [
            v["c1"]["re"], v["c1"]["hy"], v["c2"]["re"], v["c2"]["hy"]]
    _, cs, _ = call("gen", "--seq", "sjq", "--to", "1", "--format", "csv")
    assert cs.splitlines() == ["n,a,b,c,d", "0,0,1,1,3", "1,1,1,3,5"]


def test_series_json_round_trip():
    code, out, _ = call("series", "--seq", "hsj", "--order", "8")
    assert code == 0
    s = TruncatedSeries.from_json(json.loads(out))
    assert s == gen_function_series(SeqKind.HSJ, 8)
    assert list(s.coeffs) == [spinor_term(SeqKind.HSJ, n) for n in range(9)]


def test_series_printed_and_poly():
    _, out, _ = call("series", "--seq", "hsj", "--order", "2", "--printed")
    assert TruncatedSeries.from_json(json.loads(out))[0] != spinor_term(SeqKind.HSJ, 0)
    _, out, _ = call("series", "--seq", "poly", "--order", "3")
    assert list(TruncatedSeries.from_json(json.loads(out)).coeffs) == [spinor_poly_term(n) for n in range(4)]


def test_poly_command():
    _, out, _ = call("poly", "--n", "1")
    assert out.strip() == "[1+(1 + 4*x)u; -1+(1 + 2*x)u]"
    _, out, _ = call("poly", "--n", "5", "--eval-at", "1")
    assert out.strip() == str(spinor_term(SeqKind.HSJ, 5))
    _, a, _ = call("poly", "--n", "7", "--binet")
    _, b, _ = call("poly", "--n", "7")
    assert a == b
    _, out, _ = call("poly", "--n", "2", "--eval-at", "1/2")
    assert out.strip() == str(spinor_poly_term(2).map(lambda p: p(Fraction(1, 2))))


def test_quat_command():
    assert call("quat", "--op", "mul", "--lhs", "i", "--rhs", "j")[1] == "k\n"
    assert call("quat", "--op", "conj", "--lhs", "1+2i-3k")[1] == "1-2i+3k\n"
    assert call("quat", "--op", "norm", "--lhs", str(split_quat_seq(SeqKind.HSJ, 0)))[1] == "-9\n"
    _, out, _ = call("quat", "--op", "mul", "--lhs", "j", "--rhs", "k", "--format", "json")
    assert json.loads(out) == {"a": "0", "b": "-1", "c": "0", "d": "0"}


def test_verify_json_round_trip_and_strict():
    code, out, _ = call("verify", "--suite", "all", "--n-max", "64", "--format", "json", "--strict")
    assert code == 0
    data = json.loads(out)
    report = Report.from_json(data)
    assert report.to_json() == data
    assert len(report.results) == 18


def test_verify_single_and_pretty():
    code, out, err = call("verify", "--suite", "hsj-binet", "--n-max", "5")
    assert code == 0
    assert "holds_corrected" in out and "counterexample at n=0" in out
    assert LEGEND in err


def test_isotropic():
    _, out, _ = call("isotropic", "--phi1", "1", "--phi2", "u")
    assert out.splitlines() == ["alpha = (0, 2u, -2u)", "alpha1^2 + alpha2^2 - alpha3^2 = 0"]


@pytest.mark.parametrize("argv", [
    [], ["bogus"], ["gen"], ["gen", "--seq", "hsj", "--from", "3", "--to", "1"],
    ["gen", "--seq", "hsj", "--from", "-1"], ["quat", "--op", "mul", "--lhs", "i"],
    ["quat", "--op", "norm", "--lhs", "2x"], ["verify", "--suite", "nope"],
    ["verify", "--n-max", "-3"], ["poly", "--n", "2", "--eval-at", "abc"],
    ["series", "--seq", "hsj", "--order", "-1"],
])
def test_usage_errors_exit_one(argv):
    code, out, err = call(*argv)
    assert code == 1
    assert out == ""
    assert "usage" in err


def test_strict_exits_two_on_bare_failure(monkeypatch):
    import dataclasses

    from jspinor import verifier

    reg = list(verifier.list_identities())
    idx = next(i for i, r in enumerate(reg) if r.id == "hsj-binet")
    reg[idx] = dataclasses.replace(reg[idx], corrected=reg[idx].printed)
    monkeypatch.setattr(verifier, "_REGISTRY", tuple(reg))
    assert call("verify", "--suite", "hsj-binet", "--n-max", "4", "--strict")[0] == 2
    assert call("verify", "--suite", "hsj-binet", "--n-max", "4")[0] == 0
