import json

from bigdescents.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestTable:
    def test_text(self, capsys):
        code, out, _ = run(capsys, "table", "--patterns", "231", "--n", "8",
                           "--stat", "bdes")
        assert code == 0
        assert out.strip() == "128 672 560 70 0 0 0 0 0"

    def test_pair_class(self, capsys):
        code, out, _ = run(capsys, "table", "--patterns", "132,321",
                           "--n", "6", "--stat", "bdes")
        assert code == 0
        assert out.split() == ["2", "14", "0", "0", "0", "0", "0"]

    def test_empty_patterns_is_full_group(self, capsys):
        code, out, _ = run(capsys, "table", "--patterns", "", "--n", "4",
                           "--stat", "bdes")
        assert code == 0
        counts = list(map(int, out.split()))
        assert sum(counts) == 24
        from bigdescents.genfun import eulerian_r
        want = eulerian_r(4, 1)
        assert counts[:len(want)] == want

    def test_json(self, capsys):
        code, out, _ = run(capsys, "table", "--patterns", "213,231",
                           "--n", "7", "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert data["patterns"] == ["213", "231"]
        assert data["counts"] == [7, 35, 21, 1, 0, 0, 0, 0]

    def test_bfile(self, capsys):
        code, out, _ = run(capsys, "table", "--patterns", "231", "--n", "4",
                           "--format", "bfile")
        assert code == 0
        lines = out.strip().splitlines()
        # rows 1 / 1 / 2 / 4 1 / 8 6 flattened with 1-based indices
        assert lines[0] == "1 1"
        values = [int(line.split()[1]) for line in lines]
        assert values == [1, 1, 2, 4, 1, 8, 6]
        indices = [int(line.split()[0]) for line in lines]
        assert indices == list(range(1, 8))

    def test_guard_exit_code(self, capsys):
        code, _, err = run(capsys, "table", "--patterns", "132", "--n", "20")
        assert code == 3
        assert "guard" in err

    def test_invalid_stat_exit_code(self, capsys):
        code, _, err = run(capsys, "table", "--patterns", "132", "--n", "3",
                           "--stat", "sideways")
        assert code == 2


class TestSeries:
    def test_text_rows(self, capsys):
        code, out, _ = run(capsys, "series", "--id", "B231_321",
                           "--order", "9")
        assert code == 0
        assert "9: 55 + 147*t + 53*t^2 + t^3" in out

    def test_both_routes(self, capsys):
        code, out, _ = run(capsys, "series", "--id", "B132", "--order", "7",
                           "--route", "both")
        assert code == 0

    def test_r_parameter(self, capsys):
        code, out, _ = run(capsys, "series", "--id", "R_run", "--order", "5",
                           "--r", "2")
        assert code == 0
        assert out.startswith("0: 1")

    def test_json(self, capsys):
        code, out, _ = run(capsys, "series", "--id", "B123_321",
                           "--order", "4", "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert data["order"] == 4
        assert data["rows"][3] == {"n": 3, "poly": "2 + 2*t"}

    def test_missing_r_is_invalid(self, capsys):
        code, _, err = run(capsys, "series", "--id", "R_run", "--order", "5")
        assert code == 2


class TestBijection:
    def test_apply(self, capsys):
        code, out, _ = run(capsys, "bijection", "--id", "chi",
                           "--apply", "2413756")
        assert code == 0 and out.strip() == "UUDUUDDDUUUDDD"

    def test_invert(self, capsys):
        code, out, _ = run(capsys, "bijection", "--id", "chi",
                           "--invert", "UUDUUDDDUUUDDD")
        assert code == 0 and out.strip() == "2413756"

    def test_psi_tokens(self, capsys):
        code, out, _ = run(capsys, "bijection", "--id", "psi",
                           "--invert", "h1 u h1 h0 u d d")
        assert code == 0 and out.strip() == "UDUUDUUUDUDDUDDD"

    def test_verify_report(self, capsys):
        code, out, _ = run(capsys, "bijection", "--id", "omega_f",
                           "--verify-n", "6", "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert data["population"] == 132
        assert data["round_trip_failures"] == 0

    def test_domain_violation_is_invalid_input(self, capsys):
        code, _, err = run(capsys, "bijection", "--id", "chi",
                           "--apply", "321")
        assert code == 2


class TestQsym:
    def test_schur(self, capsys):
        code, out, _ = run(capsys, "qsym", "--patterns", "123", "--n", "5")
        assert code == 0
        assert out.strip() == "s(2,2,1)+4s(3,2)+3s(4,1)+5s(5)"

    def test_schur_1234(self, capsys):
        code, out, _ = run(capsys, "qsym", "--patterns", "1234", "--n", "4")
        assert code == 0
        assert out.strip() == "2s(2,2)+4s(3,1)+7s(4)"

    def test_empty_patterns(self, capsys):
        code, out, _ = run(capsys, "qsym", "--patterns", "", "--n", "7")
        assert code == 0
        assert out.strip().endswith("+64s(7)")

    def test_monomial_and_fundamental(self, capsys):
        code, out, _ = run(capsys, "qsym", "--patterns", "123", "--n", "3",
                           "--basis", "monomial", "--format", "json")
        assert code == 0
        assert json.loads(out)["symmetric"] is True
        code, out, _ = run(capsys, "qsym", "--patterns", "123", "--n", "3",
                           "--basis", "fundamental", "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert [[3], 3] in data["coeffs"]  # three avoiders with no big descent

    def test_non_symmetric_schur_fails(self, capsys):
        # single-pattern 132 sums stop being symmetric at weight 4
        code, _, err = run(capsys, "qsym", "--patterns", "132", "--n", "4")
        assert code == 1
        assert "not symmetric" in err

    def test_guard(self, capsys):
        code, _, err = run(capsys, "qsym", "--patterns", "", "--n", "9")
        assert code == 3


class TestVerifyAndConjecture:
    def test_verify_crossroutes(self, capsys):
        code, out, _ = run(capsys, "verify", "--scope", "genfun-crossroutes",
                           "--max-n", "6")
        assert code == 0
        assert "9/9 checks passed" in out

    def test_verify_json(self, capsys):
        code, out, _ = run(capsys, "verify", "--scope", "class-equalities",
                           "--max-n", "5", "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert data["pass"] is True

    def test_conjecture_real_rooted(self, capsys):
        code, out, _ = run(capsys, "conjecture", "--which", "real-rooted",
                           "--max-n", "7")
        assert code == 0
        assert "matches predictions" in out

    def test_conjecture_too_small_to_observe_failure(self, capsys):
        # the predicted real-rootedness failure only appears from length 7 on
        code, out, _ = run(capsys, "conjecture", "--which", "real-rooted",
                           "--max-n", "5")
        assert code == 1


class TestFormula:
    def test_values(self, capsys):
        code, out, _ = run(capsys, "formula", "--id", "b231", "--n", "7",
                           "--k", "3")
        assert code == 0 and out.strip() == "5"

    def test_eulerian_poly(self, capsys):
        code, out, _ = run(capsys, "formula", "--id", "eulerian_r",
                           "--n", "4", "--r", "0")
        assert code == 0 and out.strip() == "1 11 11 1"

    def test_joint(self, capsys):
        code, out, _ = run(capsys, "formula", "--id", "b231_joint",
                           "--n", "7", "--j", "3", "--k", "2")
        assert code == 0
        from bigdescents.genfun import b231_joint
        assert out.strip() == str(b231_joint(7, 3, 2))

    def test_missing_argument(self, capsys):
        code, _, err = run(capsys, "formula", "--id", "b231", "--n", "7")
        assert code == 2


class TestDeterminism:
    def test_identical_invocations_identical_output(self, capsys):
        a = run(capsys, "table", "--patterns", "321", "--n", "7",
                "--format", "json")
        b = run(capsys, "table", "--patterns", "321", "--n", "7",
                "--format", "json")
        assert a == b

    def test_config_file_overrides(self, tmp_path, capsys):
        cfg = tmp_path / "limits.json"
        cfg.write_text('{"avoider_guard_patterns": 5}')
        code, _, err = run(capsys, "--config", str(cfg), "table",
                           "--patterns", "132", "--n", "6")
        assert code == 3
