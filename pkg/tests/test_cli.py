"""
Tests for the command-line front end
"""

import io
import itertools
import json

import numpy as np
import pytest

from core.config import Config
from core.enums import ExitCode
from rankone_cli import RankOneCLI


def run(*argv):
    cli = RankOneCLI(stdout=io.StringIO(), stderr=io.StringIO())
    code = cli.run(list(argv))
    return code, cli.stdout.getvalue(), cli.stderr.getvalue()


def table(name):
    return str(Config.tables_dir() / f"{name}.slices")


@pytest.fixture
def sign_conflict(tmp_path):
    path = tmp_path / "conflict.slices"
    path.write_text("1 1 | 1 -1\n")
    return str(path)


class TestAnalyze:

    def test_table3_summary(self):
        code, out, _ = run("analyze", table("table3"))
        assert code == ExitCode.SUCCESS
        assert "dims 3x3x3, m = 7" in out
        assert "Design matrix: 7 x 7, rank 7, dof 0" in out
        assert "Condition (A): true" in out
        assert "Real: 1 solution (GF(2) kernel dimension 0)" in out
        assert "Complex: 3 solutions" in out
        assert "Elementary divisors: 1,1,1,1,1,1,3" in out
        assert ("Non-uniqueness witness (phase shift in turns): "
                "a3 + 1/3, b2 + 2/3, b3 + 1/3, c2 + 2/3, c3 + 1/3") in out

    def test_table1_has_no_witness(self):
        code, out, _ = run("analyze", table("table1"))
        assert code == ExitCode.SUCCESS
        assert "Complex: 1 solution\n" in out
        assert "witness" not in out

    def test_table4_real_failure(self):
        _, out, _ = run("analyze", table("table4"), "--field", "real")
        assert "Real: 0 solutions (sign system inconsistent)" in out
        assert "Complex" not in out

    def test_json_report(self):
        code, out, _ = run("analyze", table("table3"), "--json")
        assert code == ExitCode.SUCCESS
        report = json.loads(out)
        assert report["pattern"]["condition_a"] is True
        assert report["pattern"]["design_shape"] == [7, 7]
        assert report["real"]["count"] == 1
        assert report["complex"]["count"] == 3
        assert report["complex"]["divisors"] == [1, 1, 1, 1, 1, 1, 3]
        assert report["complex"]["witness"]["a3"] == "1/3"
        assert report["fit"] is None
        assert report["provenance"]["tool"] == "rankone"

    def test_json_is_byte_identical(self):
        assert run("analyze", table("table4"), "--json") == run("analyze", table("table4"), "--json")

    def test_non_real_input(self, tmp_path):
        path = tmp_path / "phase.slices"
        path.write_text("1@1/3 1 | 1 *\n")
        code, out, _ = run("analyze", str(path), "--json")
        assert code == ExitCode.SUCCESS
        assert json.loads(out)["real"] == {"count": 0, "status": "non_real_observations"}

    def test_underdetermined_counts(self, tmp_path):
        path = tmp_path / "single.json"
        path.write_text('{"dims":[2,2],"entries":[{"index":[1,1],"mag":"1","phase_turns":"0"}]}')
        _, out, _ = run("analyze", str(path), "--json")
        report = json.loads(out)
        assert report["pattern"]["dof"] == 2
        assert report["real"]["count"] == "infinite"
        assert report["complex"]["count"] == "infinite"


class TestSolve:

    def test_table2_lists_both_sign_patterns(self):
        code, out, _ = run("solve", table("table2"), "--field", "real")
        assert code == ExitCode.SUCCESS
        assert "Real solutions: 2 solutions, listing 2" in out
        assert "Solution 2:" in out
        assert "a3 = 1 · -1  (phase 1/2 turns)" in out

    def test_limit(self):
        _, out, _ = run("solve", table("table3"), "--field", "complex", "--limit", "1")
        assert "Complex solutions: 3 solutions, listing 1" in out
        assert "Solution 2:" not in out
        assert "(more solutions exist than are listed)" in out

    def test_exact_and_complete(self):
        _, out, _ = run("solve", table("table1"), "--field", "real", "--exact", "--complete")
        assert "[|Q(1,1,1)|]" in out
        assert "completed entries:" in out
        assert "(3,3,3) = 1 · 1" in out

    def test_partial_failure_still_succeeds(self):
        code, out, err = run("solve", table("table4"))
        assert code == ExitCode.SUCCESS
        assert "Complex solutions: 2 solutions" in out
        assert "no real rank-one completion (sign system inconsistent)" in err

    def test_no_solution_exit_code(self, sign_conflict):
        code, _, err = run("solve", sign_conflict)
        assert code == ExitCode.NO_SOLUTION
        assert "sign system inconsistent" in err
        assert "phase system inconsistent" in err

    def test_json_solutions(self):
        _, out, _ = run("solve", table("table4"), "--field", "complex", "--json")
        solutions = json.loads(out)["complex"]["solutions"]
        assert solutions["listed"] == 2
        first = solutions["items"][0]["vectors"]
        assert [entry["phase_turns"] for entry in first[2]] == ["1/2", "3/4", "1/4"]

    def test_negative_limit(self):
        code, _, err = run("solve", table("table1"), "--limit", "-1")
        assert code == ExitCode.PARSE_ERROR
        assert err.startswith("error:")


class TestFit:

    def test_table5(self):
        code, out, _ = run("fit", table("table5"), "--full")
        assert code == ExitCode.SUCCESS
        assert "  a = (1.0000, 0.9" in out
        assert "Reconstructed tensor:" in out
        grid = out.split("Reconstructed tensor:\n")[1].splitlines()
        assert len(grid) == 3
        assert all(line.count(" | ") == 2 for line in grid)

    def test_json(self):
        _, out, _ = run("fit", table("table5"), "--json")
        fit = json.loads(out)["fit"]
        assert len(fit["residuals"]) == 15
        assert fit["objective"] > 0

    def test_negative_values(self):
        code, _, err = run("fit", table("table4"))
        assert code == ExitCode.FIT_PRECONDITION
        assert "not a positive real" in err

    def test_degenerate_pattern(self, tmp_path):
        path = tmp_path / "sparse.slices"
        path.write_text("1 * | * *\n* * | * 1\n")
        code, _, err = run("fit", str(path))
        assert code == ExitCode.FIT_PRECONDITION
        assert "degrees of freedom" in err


class TestGrid:

    def test_three_way_slices(self):
        cli = RankOneCLI(stdout=io.StringIO(), stderr=io.StringIO())
        cli.print_grid(np.arange(8, dtype=float).reshape(2, 2, 2))
        assert cli.stdout.getvalue().splitlines() == [
            "  0.0000 2.0000 | 1.0000 3.0000",
            "  4.0000 6.0000 | 5.0000 7.0000",
        ]

    def test_other_orders_one_entry_per_line(self):
        cli = RankOneCLI(stdout=io.StringIO(), stderr=io.StringIO())
        cli.print_grid(np.array([[1.0, 2.0], [3.0, 4.5]]))
        assert cli.stdout.getvalue().splitlines() == [
            "  (1,1) = 1.0000", "  (1,2) = 2.0000", "  (2,1) = 3.0000", "  (2,2) = 4.5000",
        ]


class TestGenerate:

    def test_noisy_round_trip(self, tmp_path):
        output = tmp_path / "noisy.json"
        code, out, _ = run("generate", "--pattern", "table5", "--amp", "0.1", "--seed", "4",
                           "-o", str(output))
        assert code == ExitCode.SUCCESS
        assert "True factors:" in out
        assert json.loads(output.read_text())["dims"] == [3, 3, 3]
        code, _, _ = run("fit", str(output))
        assert code == ExitCode.SUCCESS

    def test_same_seed_same_file(self, tmp_path):
        paths = [tmp_path / "first.json", tmp_path / "second.json"]
        for path in paths:
            run("generate", "--dims", "3,3,3", "--density", "0.6", "--random-factors", "--amp", "0.05",
                "--seed", "9", "-o", str(path))
        assert paths[0].read_text() == paths[1].read_text()

    def test_exact_factors_without_noise(self, tmp_path):
        output = tmp_path / "exact.json"
        run("generate", "--factors", "1,2;1,3;5,7", "-o", str(output))
        code, out, _ = run("solve", str(output), "--field", "real")
        assert code == ExitCode.SUCCESS
        assert "Real solutions: 1 solution, listing 1" in out
        assert "c2 = 7" in out

    def test_amplitude_too_large(self, tmp_path):
        code, _, err = run("generate", "--dims", "2,2", "--amp", "2", "-o", str(tmp_path / "x.json"))
        assert code == ExitCode.FIT_PRECONDITION
        assert "Noise amplitude" in err

    def test_missing_dims(self, tmp_path):
        code, _, _ = run("generate", "-o", str(tmp_path / "x.json"))
        assert code == ExitCode.PARSE_ERROR


class TestOracle:

    @pytest.mark.parametrize("name,expected", [
        ("table1", ["MATCH: 1 solution"]),
        ("table2", ["MATCH: 2 solutions"]),
        ("table3", ["MATCH: 1 real solution", "MATCH: 3 complex solutions"]),
        ("table4", ["MATCH: 0 real solutions", "MATCH: 2 complex solutions"]),
    ])
    def test_bundled_tables(self, name, expected):
        code, out, _ = run("oracle", table(name))
        assert code == ExitCode.SUCCESS
        for line in expected:
            assert line in out
        assert "MISMATCH" not in out

    def test_cap_from_environment(self, monkeypatch):
        monkeypatch.setenv(Config.ORACLE_CAP_ENV, "5")
        code, _, err = run("oracle", table("table3"))
        assert code == ExitCode.CAP_EXCEEDED
        assert "exceeds cap 5" in err

    def test_large_pattern_is_refused(self, tmp_path):
        entries = [{"index": list(index), "mag": "1", "phase_turns": "0"}
                   for index in itertools.islice(itertools.product(range(1, 5), repeat=3), 30)]
        path = tmp_path / "big.json"
        path.write_text(json.dumps({"dims": [4, 4, 4], "entries": entries}))
        code, _, _ = run("oracle", str(path))
        assert code == ExitCode.CAP_EXCEEDED

    def test_raised_cap_still_refuses_overflowing_lifts(self, tmp_path, monkeypatch):
        monkeypatch.setenv(Config.ORACLE_CAP_ENV, "100")
        entries = [{"index": list(index), "mag": "1", "phase_turns": "0"}
                   for index in itertools.islice(itertools.product(range(1, 5), repeat=3), 40)]
        path = tmp_path / "big.json"
        path.write_text(json.dumps({"dims": [4, 4, 4], "entries": entries}))
        code, _, err = run("oracle", str(path))
        assert code == ExitCode.CAP_EXCEEDED
        assert "lifts" in err

    def test_non_real_input(self, tmp_path):
        path = tmp_path / "phase.slices"
        path.write_text("1@1/3 1 | 1 *\n")
        code, out, _ = run("oracle", str(path))
        assert code == ExitCode.SUCCESS
        assert "Sign search skipped: observations are not real" in out


class TestReplicate:

    def test_summary(self):
        code, out, _ = run("replicate", "--pattern", "table5", "--amp", "0.05", "--runs", "5")
        assert code == ExitCode.SUCCESS
        assert "Runs: 5" in out
        assert "Median max relative entry error:" in out

    def test_json(self):
        _, out, _ = run("replicate", "--pattern", "table5", "--amp", "0.05", "--runs", "3", "--json")
        assert json.loads(out)["replication"]["runs"] == 3

    def test_runs_must_be_positive(self):
        code, _, _ = run("replicate", "--pattern", "table5", "--runs", "0")
        assert code == ExitCode.PARSE_ERROR


class TestErrors:

    def test_missing_file(self, tmp_path):
        code, _, err = run("analyze", str(tmp_path / "missing.slices"))
        assert code == ExitCode.PARSE_ERROR
        assert err.startswith("error:")

    def test_empty_file(self, tmp_path):
        path = tmp_path / "empty.slices"
        path.write_text("# nothing observed\n")
        code, _, err = run("analyze", str(path))
        assert code == ExitCode.PARSE_ERROR
        assert "empty" in err

    def test_ragged_file(self, tmp_path):
        path = tmp_path / "ragged.slices"
        path.write_text("1 1 | 1 1\n1 | 1 1\n")
        assert run("analyze", str(path))[0] == ExitCode.PARSE_ERROR

    def test_irrational_float_phase(self, tmp_path):
        path = tmp_path / "phase.json"
        path.write_text(json.dumps({"dims": [2, 2], "entries": [
            {"index": [1, 1], "mag": 1.0, "phase_turns": 0.123456789123},
            {"index": [1, 2], "mag": 1.0, "phase_turns": 0.0},
        ]}))
        code, _, err = run("solve", str(path), "--field", "complex")
        assert code == ExitCode.PARSE_ERROR
        assert "not a recognisable rational" in err

    def test_unknown_command(self):
        assert run("transmogrify")[0] == 2

    def test_version(self, capsys):
        assert run("--version")[0] == 0
