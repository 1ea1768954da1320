import json
from fractions import Fraction
from pathlib import Path

import jsonschema
import pytest

from intchrom.cli import EXIT_CAP, EXIT_INPUT, EXIT_OK, run_cli
from intchrom.evaluators import parse_ratio
from intchrom.graph import is_forest, parse_graph

from helpers import FIXTURES, fixture_names, load_fixture

SCHEMA = json.loads((Path(__file__).parents[1] / "docs" / "analyze.schema.json").read_text())


def fx(name: str) -> str:
    return str(FIXTURES / name)


def cli_json(*argv):
    code, out = run_cli([*argv, "--json"])
    assert code == EXIT_OK, out
    return json.loads(out)


def test_analyze_c5_json():
    rec = cli_json("analyze", fx("c5.col"))
    assert rec["chi_int_star"] == "5/2"
    assert rec["suggested_k"] == 2
    assert rec["chi"] == 3
    assert rec["critical_cycle"] == "0,1,2,3,4"
    assert rec["counts"] == {"orientations": 30, "cycles": 1}
    jsonschema.validate(rec, SCHEMA)


def test_analyze_tree_text():
    code, out = run_cli(["analyze", fx("tree.col")])
    assert code == EXIT_OK
    assert "chi_int_star: 2/1 (forest)" in out
    assert "critical cycle: none" in out


@pytest.mark.parametrize("name", fixture_names())
def test_analyze_every_fixture_is_deterministic_and_valid(name):
    a = run_cli(["analyze", fx(name), "--json"])
    b = run_cli(["analyze", fx(name), "--json"])
    assert a == b and a[0] == EXIT_OK
    jsonschema.validate(json.loads(a[1]), SCHEMA)


@pytest.mark.parametrize("name", [n for n in fixture_names() if load_fixture(n).n <= 6])
def test_analyze_agrees_with_oracles(name):
    rec = cli_json("analyze", fx(name))
    assert rec["chi"] == cli_json("oracle", "chromatic", fx(name))["chi"]
    k = rec["suggested_k"]
    if k is not None and k <= 3:
        chi_k = cli_json("oracle", "chi-k", fx(name), "--k", str(k), "--interleaved")["chi_k"]
        assert Fraction(chi_k, k) == parse_ratio(rec["chi_int_star"])
    if load_fixture(name).m <= 12:
        assert rec["counts"]["orientations"] in (0, cli_json("oracle", "acyclic-count", fx(name))["count"])
    assert rec["counts"]["cycles"] == cli_json("oracle", "cycles", fx(name))["count"]


def test_timing_only_on_request():
    assert "timing_s" not in cli_json("analyze", fx("c3.col"))
    assert "timing_s" in cli_json("analyze", fx("c3.col"), "--timing")


def test_oracle_chi_k_text():
    assert run_cli(["oracle", "chi-k", fx("c5.col"), "--k", "2", "--interleaved"]) == (EXIT_OK, "5\n")


def test_chi_and_chi_int_k():
    assert run_cli(["chi", fx("c5.col")]) == (EXIT_OK, "3\n")
    rec = cli_json("chi-int-k", fx("c5.col"), "--k", "2", "--coloring")
    assert rec["chi_int_k"] == 5 and rec["palette"] <= 5
    code, out = run_cli(["chi-int-k", fx("c5.col"), "--k", "2", "--coloring"])
    assert out.splitlines()[0] == "5"
    assert out.splitlines()[1].startswith("# k=2 interleaved=true")


def test_orientations_and_cycles():
    assert run_cli(["orientations", fx("k4.col")]) == (EXIT_OK, "24\n")
    assert run_cli(["orientations", fx("k4.col"), "--count"]) == (EXIT_OK, "24\n")
    code, out = run_cli(["orientations", fx("c3.col"), "--list"])
    assert len(out.splitlines()) == 6
    assert out.splitlines()[0] == "1>0 2>0 2>1"
    assert run_cli(["cycles", fx("k4.col")]) == (EXIT_OK, "7\n")
    code, out = run_cli(["cycles", fx("k4.col"), "--list"])
    assert "0,1,2,3" in out.splitlines()


def test_product():
    code, out = run_cli(["product", fx("p3.col"), "--k", "2"])
    g = parse_graph(out, "edgelist")
    assert (g.n, g.m) == (6, 11)
    rec = cli_json("product", fx("p3.col"), "--k", "2")
    assert rec["m"] == 11


def test_ser():
    rec = cli_json("ser", fx("c5.col"), "--best")
    assert rec["concurrency"] == "2/5" == rec["cycle_formula"]
    rec = cli_json("ser", fx("c4.col"), "--orientation", "0>1,2>1,2>3,0>3")
    assert rec["concurrency"] == "1/2"
    code, out = run_cli(["ser", fx("p3.col")])
    assert code == EXIT_OK and "n/a" in out
    rec = cli_json("ser", fx("c3.col"), "--trace")
    assert len(rec["trace"]) == rec["tail"] + rec["period"] + 1


def test_lemma3_check():
    rec = cli_json("lemma3-check", fx("c5.col"), "--k", "2")
    assert rec["ok"] and rec["orientations"] == 30
    assert run_cli(["lemma3-check", fx("k4.col"), "--k", "3"])[1].startswith("ok:")


def test_gen_is_seeded():
    a = run_cli(["gen", "gnp", "--n", "7", "--p", "0.5", "--seed", "3"])
    b = run_cli(["gen", "gnp", "--n", "7", "--p", "0.5", "--seed", "3"])
    assert a == b and a[0] == EXIT_OK
    code, out = run_cli(["gen", "forest", "--n", "8", "--trees", "3", "--seed", "1", "--out-format", "edgelist"])
    assert is_forest(parse_graph(out, "edgelist"))


def test_stdin_input():
    assert run_cli(["chi", "-"], "p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n") == (EXIT_OK, "3\n")


def test_exit_codes():
    assert run_cli(["bogus"])[0] == EXIT_INPUT
    assert run_cli(["analyze", "/nonexistent/file.col"])[0] == EXIT_INPUT
    assert run_cli(["analyze", "-"], "p edge 2 1\ne 1 1\n")[0] == EXIT_INPUT
    assert run_cli(["analyze", "-"], "p edge 3 0\n")[0] == EXIT_INPUT
    assert run_cli(["analyze", fx("k5.col"), "--cap-edges", "5"])[0] == EXIT_CAP
    assert run_cli(["cycles", fx("k5.col"), "--cap-cycles", "3"])[0] == EXIT_CAP
    assert run_cli(["ser", fx("c4.col"), "--orientation", "0>1,1>2,2>3,3>0"])[0] == EXIT_INPUT


def test_help_documents_caps(capsys):
    with pytest.raises(SystemExit):
        run_cli(["analyze", "--help"])
    assert "default 20" in " ".join(capsys.readouterr().out.split())
