from __future__ import annotations

import io
import json

import pytest

from geobraid.cli import main, run
from geobraid.garside import equal
from geobraid.words import parse_word


def payload(argv, stdin=None):
    res = run(argv, stdin=stdin)
    assert res.status == 0, res.diagnostics
    return res.payload


def test_geodesic_example():
    assert payload(["geodesic", "-n", "3", "aBAB"]) == {"geodesic": False, "length": 2}


def test_stats_example():
    assert payload(["stats", "-n", "3", "abbAAbba"]) == {"p": 6, "n": 2, "exp": 4}


def test_nf_braid_relation():
    assert payload(["nf", "-n", "3", "aba"]) == payload(["nf", "-n", "3", "bab"])


def test_words_round_trip():
    for argv, key in (
        (["nf", "-n", "4", "abCAcb"], "word"),
        (["generate", "-n", "5", "--k", "1", "--x", "2,3", "--seed", "4"], "word"),
    ):
        out = payload(argv)
        w = parse_word(out[key], int(argv[2]))
        if argv[0] == "nf":
            assert equal(w, parse_word(argv[3], 4))
        else:
            assert json.loads(json.dumps(out)) == out


def test_deterministic():
    argv = ["generate", "-n", "6", "--k", "2", "--x", "3,3,3", "--seed", "9"]
    assert run(argv).render() == run(argv).render()


def test_batch_stdin():
    out = payload(["classify", "-n", "3"], stdin=io.StringIO("ab\n\nAB\n"))
    assert [o["positive"] for o in out] == [True, False]


def test_render():
    res = run(["render", "-n", "3", "aB"])
    lines = res.render().split("\n")
    assert lines[0].startswith("1   2   3")
    assert lines[3][2] == "/" and lines[6][6] == "\\"


@pytest.mark.parametrize(
    "argv,code",
    [
        (["frobnicate"], 2),
        (["geodesic", "-n", "3", "xyz"], 2),
        (["geodesic", "-n", "3", "abab", "--radius", "2"], 3),
        (["conway", "-n", "2", "a" * 25], 3),
        (["conway", "-n", "2", "a", "--inputs", "1,2"], 2),
    ],
)
def test_exit_codes(argv, code):
    assert run(argv).status == code


def test_scan_and_census():
    rep = payload(["scan", "smbc1", "-n", "3", "--radius", "6"])
    assert rep["status"] == "proved-in-range"
    res = run(["census", "-n", "3", "--radius", "4", "--kinds", "gamma_elements,trace", "--csv"])
    assert res.render().split("\n")[2] == "1,4,2"
    assert payload(["ball", "-n", "2", "--radius", "3"])["layers"] == [1, 2, 2, 2]


def test_conway_orderings():
    out = payload(["conway", "-n", "2", "aa", "--inputs", "3,1", "--outputs", "4,2"])
    assert out["coefficients"] == [1, 0, 1]
    assert payload(["order", "-n", "3", "abA"])["homogeneous"] is False
    assert payload(["certify", "-n", "3", "abAB"])["certified"] is False


def test_winding_command(tmp_path):
    out = payload(["winding", "-n", "4", "abcab"])
    assert out["report"]["ok"]
    cert = tmp_path / "c.json"
    cert.write_text(json.dumps(out["certificate"]))
    assert payload(["winding", "-n", "4", "--certificate", str(cert)])["ok"]


def test_main_prints(capsys):
    assert main(["stats", "-n", "2", "aA"]) == 0
    assert json.loads(capsys.readouterr().out) == {"p": 1, "n": 1, "exp": 0}
