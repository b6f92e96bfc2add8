"""CLI contract: exit codes, report schema, CSV/JSON agreement, reproducibility."""

import csv
import json

import jsonschema

from lightsout import cli, formulas


SCHEMA = json.load(open("docs/report_schema.json", encoding="utf-8"))


def run_json(argv, capsys):
    code, report = cli.run([*argv, "--json"])
    payload = json.loads(capsys.readouterr().out)
    jsonschema.validate(payload, SCHEMA)
    return code, report, payload


class TestExitCodes:
    def test_success_is_zero(self, capsys):
        code, _ = cli.run(["counts", "--g", "path:3"])
        capsys.readouterr()
        assert code == 0

    def test_unknown_verb_is_usage_error(self, capsys):
        code, report = cli.run(["frobnicate"])
        capsys.readouterr()
        assert (code, report) == (2, None)

    def test_bad_graph_spec_is_usage_error(self, capsys):
        code, _ = cli.run(["counts", "--g", "dodecahedron"])
        err = capsys.readouterr().err
        assert code == 2
        assert "dodecahedron" in err

    def test_bad_prime_is_usage_error(self, capsys):
        code, _ = cli.run(["snf", "--g", "path:2", "--p", "4"])
        capsys.readouterr()
        assert code == 2

    def test_graph_file_errors_carry_position(self, tmp_path, capsys):
        path = tmp_path / "broken.txt"
        path.write_text("3\n0 0\n")
        code, _ = cli.run(["counts", "--g", f"file:{path}"])
        err = capsys.readouterr().err
        assert code == 2
        assert ":2:" in err

    def test_missing_required_flag(self, capsys):
        code, _ = cli.run(["nullity", "--g", "petersen"])
        capsys.readouterr()
        assert code == 2

    def test_formula_oracle_mismatch_exits_one(self, capsys, monkeypatch):
        monkeypatch.setattr(formulas, "oracle_nullity", lambda *a, **k: 999)
        code, report = cli.run(["nullity", "--g", "path:2", "--h", "path:2"])
        capsys.readouterr()
        assert code == 1
        assert report.violations

    def test_help_exits_zero(self, capsys):
        code, _ = cli.run(["--help"])
        capsys.readouterr()
        assert code == 0


class TestCommands:
    def test_nullity_petersen_pair(self, capsys):
        code, _, payload = run_json(
            ["nullity", "--g", "petersen", "--h", "petersen", "--mode", "open"], capsys
        )
        assert code == 0
        row = payload["results"][0]
        assert row["nullity_formula"] == 42
        assert row["nullity_oracle"] == 42
        assert row["oracle_match"] == "ok"
        assert payload["violations"] == []

    def test_snf_star5_rendering(self, capsys):
        code, _, payload = run_json(["snf", "--g", "star:5", "--p", "2"], capsys)
        assert code == 0
        assert payload["results"][0]["invariant_factors"] == "1, 1, x, x, x^3"

    def test_counts_grid_closed(self, capsys):
        code, _, payload = run_json(
            ["counts", "--g", "grid:5x5", "--mode", "closed"], capsys
        )
        assert code == 0
        row = payload["results"][0]
        assert (row["r"], row["nu"]) == (23, 2)

    def test_charpoly_routes_agree(self, capsys):
        code, _, payload = run_json(["charpoly", "--g", "petersen"], capsys)
        assert code == 0
        row = payload["results"][0]
        assert row["charpoly_snf"] == row["charpoly_oracle"]
        assert row["match"] == "ok"

    def test_bound_reports_charpolys(self, capsys):
        code, _, payload = run_json(
            ["bound", "--g", "path:2", "--h", "path:2"], capsys
        )
        assert code == 0
        row = payload["results"][0]
        assert row["charpoly_g"] == "x^2 + 1"
        assert row["lower_bound"] == 2
        assert row["bound_holds"] == "ok"

    def test_solve_single_graph(self, capsys):
        code, _, payload = run_json(
            ["solve", "--g", "grid:5x5", "--mode", "closed"], capsys
        )
        assert code == 0
        row = payload["results"][0]
        assert row["solvable"] == "yes"
        assert len(row["presses"]) == 25
        assert row["solution_exponent"] == 2

    def test_solve_product_game(self, capsys):
        code, _, payload = run_json(
            ["solve", "--g", "path:2", "--h", "path:2"], capsys
        )
        assert code == 0
        row = payload["results"][0]
        assert row["solvable"] == "yes"
        assert row["solution_exponent"] == 2

    def test_solve_unsolvable(self, capsys):
        # single vertex, open mode: pressing does nothing, light stays on
        code, _, payload = run_json(["solve", "--g", "path:1"], capsys)
        assert code == 0
        assert payload["results"][0]["solvable"] == "no"

    def test_nullity_gf3(self, capsys):
        code, _, payload = run_json(
            ["nullity", "--g", "cycle:3", "--h", "cycle:3", "--p", "3"], capsys
        )
        assert code == 0
        assert payload["results"][0]["oracle_match"] == "ok"

    def test_oracle_cap_skips(self, capsys):
        code, _, payload = run_json(
            ["nullity", "--g", "petersen", "--h", "petersen", "--max-oracle", "50"],
            capsys,
        )
        assert code == 0
        row = payload["results"][0]
        assert row["nullity_oracle"] == "skipped"
        assert row["oracle_match"] == "skipped"
        assert row["nullity_formula"] == 42


class TestSweep:
    def test_stars_match_closed_form(self, capsys):
        code, _, payload = run_json(["sweep", "stars"], capsys)
        assert code == 0
        rows = payload["results"]
        assert len(rows) == 16
        for row in rows:
            n = int(row["g"].split(":")[1])
            m = int(row["h"].split(":")[1])
            assert row["nullity_formula"] == (m - 2) * (n - 2) + 2
            assert row["oracle_match"] == "ok"

    def test_random_rows_carry_seed(self, capsys):
        code, _, payload = run_json(["sweep", "random:10", "--seed", "7"], capsys)
        assert code == 0
        assert payload["seed"] == 7
        assert len(payload["results"]) == 10
        assert all(row["seed"] == 7 for row in payload["results"])
        assert all(row["oracle_match"] == "ok" for row in payload["results"])

    def test_empty_range_is_success(self, capsys):
        code, _, payload = run_json(["sweep", "stars:9-3"], capsys)
        assert code == 0
        assert payload["results"] == []

    def test_unknown_target_is_usage_error(self, capsys):
        code, _ = cli.run(["sweep", "moons"])
        capsys.readouterr()
        assert code == 2

    def test_reproducible_for_seed(self, capsys):
        _, _, first = run_json(["sweep", "random:12", "--seed", "3"], capsys)
        _, _, second = run_json(["sweep", "random:12", "--seed", "3"], capsys)
        assert first == second


class TestVerify:
    def test_lemma_inequality_never_fails(self, capsys):
        code, _, payload = run_json(["verify", "lemma"], capsys)
        assert code == 0
        row = payload["results"][0]
        assert row["trials"] == 10000
        assert row["inequality_violations"] == 0
        # the stated equality condition is not an iff; that is reported, not fatal
        assert row["equality_condition_mismatches"] > 0
        assert any("counterexample" in note for note in payload["notes"])

    def test_conjecture_open_small_run(self, capsys, monkeypatch):
        monkeypatch.setattr(cli, "RANDOM_PAIR_COUNT", 40)
        code, _, payload = run_json(["verify", "conjecture-open", "--seed", "2"], capsys)
        assert code == 0
        assert payload["violations"] == []
        assert all(r["bound_holds"] == "ok" for r in payload["results"])

    def test_conjecture_closed_small_run(self, capsys, monkeypatch):
        monkeypatch.setattr(cli, "RANDOM_PAIR_COUNT", 40)
        code, _, payload = run_json(["verify", "conjecture-closed", "--seed", "2"], capsys)
        assert code == 0
        assert payload["violations"] == []

    def test_example2_table(self, capsys):
        code, _, payload = run_json(["verify", "example2"], capsys)
        assert code == 0
        rows = payload["results"]
        assert len(rows) == 36  # n in {3,5,7,9} x m in 1..9
        for row in rows:
            assert row["oracle"] == row["formula"]
        assert any("agrees with" in note for note in payload["notes"])

    def test_invalid_target_rejected(self, capsys):
        code, _ = cli.run(["verify", "example99"])
        capsys.readouterr()
        assert code == 2


class TestOutputs:
    def test_json_round_trips(self, capsys):
        _, report, payload = run_json(["counts", "--g", "petersen"], capsys)
        assert json.loads(json.dumps(payload)) == payload
        assert payload == report.to_dict()

    def test_csv_and_json_encode_identical_tables(self, tmp_path, capsys):
        out = tmp_path / "table.csv"
        _, _, payload = run_json(
            ["sweep", "stars:3-5", "--csv", str(out)], capsys
        )
        with open(out, newline="", encoding="utf-8") as fh:
            rows = list(csv.DictReader(fh))
        assert len(rows) == len(payload["results"])
        for got, want in zip(rows, payload["results"]):
            assert set(got) == set(want)
            for key, value in want.items():
                assert got[key] == str(value)

    def test_human_table_renders(self, capsys):
        code, _ = cli.run(["snf", "--g", "star:5"])
        out = capsys.readouterr().out
        assert code == 0
        assert "invariant_factors" in out
        assert "1, 1, x, x, x^3" in out

    def test_command_echo_reproduces(self, capsys):
        _, report, payload = run_json(["counts", "--g", "path:4"], capsys)
        echoed = payload["command"].split()[1:]
        code2, report2 = cli.run(echoed)
        capsys.readouterr()
        assert report2.results == report.results
