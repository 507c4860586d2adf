import io
import json
import sys
from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fpr.cli_io import parse_profile, run_cli, serialize_profile
from fpr.core import Election, ParseError
from fpr.instances import gen_example_narcissistic_util
from fpr.verify import CheckResult
from helpers import CYCLE, make_election

DATA = Path(__file__).parent / "data"

DOC_KEYS = ["rule", "aggregator", "alpha", "k", "objective", "committee",
            "representatives", "contiguous", "blocks", "diagnostics"]


@st.composite
def elections(draw):
    m = draw(st.integers(1, 5))
    n = draw(st.integers(1, 6))
    votes = [draw(st.permutations(range(m))) for _ in range(n)]
    return Election.from_votes(votes)


def test_round_trip_fixed():
    e = gen_example_narcissistic_util()
    assert parse_profile(io.StringIO(serialize_profile(e))) == e


@given(elections())
def test_round_trip_property(e):
    assert parse_profile(serialize_profile(e).splitlines()) == e


def test_fixture_matches_generator():
    assert parse_profile(DATA / "narcissistic12.profile") \
        == gen_example_narcissistic_util()


def test_parse_error_lines():
    with pytest.raises(ParseError) as err:
        parse_profile(["x"])
    assert err.value.line == 1
    with pytest.raises(ParseError) as err:
        parse_profile(["2", "1 a", "2\tb", "1 1", "1: 1,2"])
    assert err.value.line == 2          # missing tab
    with pytest.raises(ParseError) as err:
        parse_profile(["2", "1\ta", "2\tb", "2 1", "2: 1,1"])
    assert err.value.line == 5          # not a permutation
    with pytest.raises(ParseError) as err:
        parse_profile(["2", "1\ta", "2\tb", "2 0", "1: 1,2"])
    assert err.value.line == 4
    with pytest.raises(ParseError) as err:
        parse_profile(["2", "1\ta", "2\tb", "1 1", "1: 1,2", "junk"])
    assert err.value.line == 6


def _run(monkeypatch, capsys, argv, stdin=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    rc = run_cli(argv)
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def test_gen_then_solve_monroe(monkeypatch, capsys):
    rc, profile, _ = _run(monkeypatch, capsys, ["gen", "example2"])
    assert rc == 0
    rc, out, _ = _run(monkeypatch, capsys,
                      ["solve-monroe", "--k", "2", "--alpha", "borda",
                       "--agg", "max"], stdin=profile)
    assert rc == 0
    doc = json.loads(out)
    assert doc["objective"] == 2
    assert doc["rule"] == "monroe"
    rc, out, _ = _run(monkeypatch, capsys,
                      ["oracle", "--rule", "monroe", "--k", "2",
                       "--alpha", "borda", "--agg", "sum"], stdin=profile)
    assert rc == 0
    assert json.loads(out)["objective"] == 11


def test_check_domain(monkeypatch, capsys):
    rc, profile, _ = _run(monkeypatch, capsys, ["gen", "example1"])
    assert rc == 0
    rc, out, _ = _run(monkeypatch, capsys,
                      ["check-domain", "--axis-limit", "3"], stdin=profile)
    assert rc == 0
    doc = json.loads(out)
    assert doc["single_crossing"] is True
    assert doc["witness_voter_order"] == list(range(1, 17))
    assert doc["narcissistic"] is False
    assert doc["single_peaked_checked"] is False
    assert doc["single_peaked_axis"] is None


def test_solve_cc_document(tmp_path, monkeypatch, capsys):
    path = tmp_path / "ex2.profile"
    path.write_text(serialize_profile(gen_example_narcissistic_util()),
                    encoding="utf-8")
    argv = ["solve-cc", "--in", str(path), "--k", "2", "--alpha", "borda",
            "--agg", "sum"]
    rc, out, _ = _run(monkeypatch, capsys, argv)
    assert rc == 0
    doc = json.loads(out)
    assert list(doc) == DOC_KEYS
    assert doc["objective"] == 7
    assert doc["committee"] == ["c", "e"]
    assert doc["contiguous"] is True
    assert len(doc["representatives"]) == 12
    # byte-identical across runs
    rc, again, _ = _run(monkeypatch, capsys, argv)
    assert rc == 0 and again == out


def test_exit_code_domain_violation(monkeypatch, capsys):
    profile = serialize_profile(make_election(*CYCLE))
    rc, _, err = _run(monkeypatch, capsys,
                      ["solve-cc", "--k", "1", "--alpha", "borda",
                       "--agg", "sum"], stdin=profile)
    assert rc == 2
    assert "domain violation" in err


def test_exit_code_parse_error(monkeypatch, capsys):
    rc, _, err = _run(monkeypatch, capsys,
                      ["solve-cc", "--k", "1", "--alpha", "borda",
                       "--agg", "sum"], stdin="garbage\n")
    assert rc == 3
    assert "line 1" in err


def test_exit_code_size_limit(monkeypatch, capsys):
    rc, profile, _ = _run(monkeypatch, capsys,
                          ["gen", "random-sc", "--m", "5", "--n", "10",
                           "--seed", "1"])
    assert rc == 0
    rc, _, err = _run(monkeypatch, capsys, ["reduce", "--k", "1"],
                      stdin=profile)
    assert rc == 4
    assert "size limit" in err


def test_exit_code_usage(monkeypatch, capsys):
    assert _run(monkeypatch, capsys, ["solve-cc", "--bogus"])[0] == 64
    assert _run(monkeypatch, capsys, ["no-such-command"])[0] == 64
    rc, profile, _ = _run(monkeypatch, capsys, ["gen", "example2"])
    rc, _, err = _run(monkeypatch, capsys,
                      ["solve-monroe", "--k", "2", "--alpha", "borda",
                       "--agg", "sum"], stdin=profile)
    assert rc == 64
    assert "--oracle" in err


def test_threads_env_validation(monkeypatch, capsys):
    monkeypatch.setenv("FPR_THREADS", "abc")
    assert run_cli(["gen", "example2"]) == 64
    capsys.readouterr()
    monkeypatch.setenv("FPR_THREADS", "0")
    assert run_cli(["gen", "example2"]) == 64
    capsys.readouterr()
    monkeypatch.setenv("FPR_THREADS", "2")
    assert run_cli(["gen", "example2"]) == 0


def test_width_partition_flag(tmp_path, monkeypatch, capsys):
    profile = serialize_profile(make_election("abc", "bac", "cab"))
    part = tmp_path / "clones.json"
    part.write_text("[[1, 2], [3]]", encoding="utf-8")
    argv = ["solve-cc", "--k", "1", "--alpha", "borda", "--agg", "sum",
            "--width-partition", str(part)]
    rc, out, _ = _run(monkeypatch, capsys, argv, stdin=profile)
    assert rc == 0
    assert json.loads(out)["objective"] == 2
    # same profile is out of domain for the plain solver
    rc, _, _ = _run(monkeypatch, capsys,
                    ["solve-cc", "--k", "1", "--alpha", "borda",
                     "--agg", "sum"], stdin=profile)
    assert rc == 2


def test_custom_alpha_file(tmp_path, monkeypatch, capsys):
    rc, profile, _ = _run(monkeypatch, capsys, ["gen", "example2"])
    alpha = tmp_path / "alpha.txt"
    alpha.write_text("0 1 1 2 2 3\n", encoding="utf-8")
    rc, out, _ = _run(monkeypatch, capsys,
                      ["solve-cc", "--k", "2", "--alpha",
                       f"custom:{alpha}", "--agg", "sum"], stdin=profile)
    assert rc == 0
    doc = json.loads(out)
    assert doc["alpha"] == "custom"
    assert doc["objective"] >= 0
    rc, _, _ = _run(monkeypatch, capsys,
                    ["solve-cc", "--k", "2", "--alpha", "custom:/no/such",
                     "--agg", "sum"], stdin=profile)
    assert rc == 3


def test_auto_order_flag(monkeypatch, capsys):
    profile = serialize_profile(make_election("bac", "abc", "bca"))
    base = ["solve-cc", "--k", "1", "--alpha", "borda", "--agg", "sum"]
    rc, _, _ = _run(monkeypatch, capsys, base, stdin=profile)
    assert rc == 2
    rc, out, _ = _run(monkeypatch, capsys, base + ["--auto-order"],
                      stdin=profile)
    assert rc == 0
    assert json.loads(out)["objective"] == 1


def test_verify_subcommand(monkeypatch, capsys):
    rows = [CheckResult("first", True, "all good", 0.1),
            CheckResult("second", False, "broke", 0.2)]
    monkeypatch.setattr("fpr.verify.run_all", lambda: rows)
    rc, out, _ = _run(monkeypatch, capsys, ["verify"])
    assert rc == 1
    assert "PASS first: all good" in out
    assert "FAIL second: broke" in out
    assert "1/2 criteria passed" in out
    monkeypatch.setattr("fpr.verify.run_all", lambda: rows[:1])
    assert _run(monkeypatch, capsys, ["verify"])[0] == 0
