import csv
import io
import json

from arithfn import convolution
from arithfn.cli import run
from arithfn.convolution import BuiltinImpl, VerificationReport


def out_lines(capsys):
    return capsys.readouterr().out.strip().splitlines()


class TestFactorCommand:
    def test_natural(self, capsys):
        assert run(["factor", "60"]) == 0
        assert out_lines(capsys) == ["60 = 2^2 * 3 * 5"]

    def test_unit(self, capsys):
        assert run(["factor", "1"]) == 0
        assert out_lines(capsys) == ["1 = 1"]

    def test_rational(self, capsys):
        assert run(["factor", "--rational", "8/9"]) == 0
        assert out_lines(capsys) == ["8/9 = 2^3 * 3^-2"]

    def test_json(self, capsys):
        assert run(["factor", "60", "--format", "json"]) == 0
        obj = json.loads(capsys.readouterr().out)
        assert obj == {"input": "60", "kind": "natural", "factors": [[2, 2], [3, 1], [5, 1]]}

    def test_csv(self, capsys):
        assert run(["factor", "12", "--format", "csv"]) == 0
        rows = list(csv.reader(io.StringIO(capsys.readouterr().out)))
        assert rows == [["prime", "exponent"], ["2", "2"], ["3", "1"]]

    def test_requires_exactly_one_input(self, capsys):
        assert run(["factor"]) == 2
        assert run(["factor", "6", "--rational", "1/2"]) == 2

    def test_malformed_rational(self, capsys):
        assert run(["factor", "--rational", "8:9"]) == 2
        assert run(["factor", "--rational", "0/3"]) == 2


class TestEvalCommand:
    def test_delta_60(self, capsys):
        assert run(["eval", "delta", "60"]) == 0
        assert out_lines(capsys) == ["92"]

    def test_rational(self, capsys):
        assert run(["eval", "delta", "--rational", "3/2"]) == 0
        assert out_lines(capsys) == ["-1/4"]

    def test_partial(self, capsys):
        assert run(["eval", "delta_p:2", "12"]) == 0
        assert out_lines(capsys) == ["12"]

    def test_mangoldt(self, capsys):
        assert run(["eval", "mangoldt:ld", "8"]) == 0
        assert out_lines(capsys) == ["1/2"]

    def test_mangoldt_rejects_rational(self, capsys):
        assert run(["eval", "mangoldt:ld", "--rational", "1/2"]) == 2
        assert "natural" in capsys.readouterr().err

    def test_unknown_function(self, capsys):
        assert run(["eval", "sqrt", "4"]) == 2

    def test_json(self, capsys):
        assert run(["eval", "ld", "8", "--format", "json"]) == 0
        obj = json.loads(capsys.readouterr().out)
        assert obj == {"function": "ld", "argument": "8", "value": "3/2"}


class TestConvolveCommand:
    def test_table(self, capsys):
        assert run(["convolve", "id", "delta", "--limit", "6"]) == 0
        lines = out_lines(capsys)
        assert lines[5] == "6\t10"

    def test_at(self, capsys):
        assert run(["convolve", "one", "one", "--at", "12"]) == 0
        assert out_lines(capsys) == ["6"]

    def test_json(self, capsys):
        assert run(["convolve", "eps", "tau", "--limit", "4", "--format", "json"]) == 0
        obj = json.loads(capsys.readouterr().out)
        assert obj["limit"] == 4
        assert obj["values"] == ["1/1", "2/1", "2/1", "3/1"]

    def test_csv(self, capsys):
        assert run(["convolve", "one", "mu", "--limit", "3", "--format", "csv"]) == 0
        rows = list(csv.reader(io.StringIO(capsys.readouterr().out)))
        assert rows == [["n", "value"], ["1", "1/1"], ["2", "0/1"], ["3", "0/1"]]

    def test_parse_error(self, capsys):
        assert run(["convolve", "1 * id", "one"]) == 2
        assert "one" in capsys.readouterr().err


class TestVerifyCommand:
    def test_single_json(self, capsys):
        assert run(["verify", "eq13", "--limit", "2000", "--format", "json"]) == 0
        obj = json.loads(capsys.readouterr().out)
        assert obj["identity"] == "eq13"
        assert obj["range"] == 2000
        assert obj["holds"] is True

    def test_all_at_1000_exits_zero(self, capsys):
        assert run(["verify", "all", "--limit", "1000"]) == 0
        lines = out_lines(capsys)
        assert lines[-1].startswith("20/20 identities hold")

    def test_corruption_flips_exit_code(self, capsys, monkeypatch):
        orig = convolution._SIMPLE_BUILTINS["tau"]

        def corrupted_tab(limit, sieve):
            vals = orig.tabulate(limit, sieve)
            if limit >= 100:
                vals[100] += 1
            return vals

        monkeypatch.setitem(
            convolution._SIMPLE_BUILTINS,
            "tau",
            BuiltinImpl("tau", True, corrupted_tab, orig.at),
        )
        assert run(["verify", "all", "--limit", "1000"]) == 1
        assert "MISMATCH" in capsys.readouterr().out

    def test_unknown_identity(self, capsys):
        assert run(["verify", "eq99"]) == 2
        assert "unknown name" in capsys.readouterr().err

    def test_csv(self, capsys):
        assert run(["verify", "eq13", "--limit", "100", "--format", "csv"]) == 0
        rows = list(csv.reader(io.StringIO(capsys.readouterr().out)))
        assert rows[0] == ["identity", "range", "holds", "mismatch_n", "case", "lhs", "rhs", "elapsed_s"]
        assert rows[1][0] == "eq13"
        assert rows[1][2] == "True"

    def test_seed_accepted(self, capsys):
        assert run(["verify", "compmult-distr", "--limit", "200", "--seed", "9"]) == 0


class TestSeriesCommand:
    def test_pass(self, capsys):
        rc = run(
            ["series", "thm3.3", "--s", "4", "--limit", "20000", "--primes", "20000",
             "--tol", "1e-6", "--format", "json"]
        )
        assert rc == 0
        obj = json.loads(capsys.readouterr().out)
        assert obj["pass"] is True
        assert obj["N"] == 20000

    def test_tolerance_breach_exits_one(self, capsys):
        rc = run(["series", "thm3.3", "--s", "4", "--limit", "100", "--primes", "1000",
                  "--tol", "1e-12"])
        assert rc == 1
        assert "FAIL" in capsys.readouterr().out

    def test_out_of_domain(self, capsys):
        assert run(["series", "thm3.3", "--s", "1.5", "--limit", "100", "--primes", "100"]) == 2
        assert "Re(s)" in capsys.readouterr().err

    def test_complex_s(self, capsys):
        rc = run(["series", "lemma-Fld", "--s", "3,1", "--limit", "5000", "--primes", "5000",
                  "--tol", "1e-6", "--format", "json"])
        assert rc == 0
        obj = json.loads(capsys.readouterr().out)
        assert obj["s"] == {"re": 3.0, "im": 1.0}

    def test_sigmak_k_flag(self, capsys):
        rc = run(["series", "cor-sigmak", "--s", "6", "--limit", "5000", "--primes", "5000",
                  "--tol", "1e-4", "--k", "2"])
        assert rc == 0

    def test_unknown_preset(self, capsys):
        assert run(["series", "cor-42", "--s", "4"]) == 2


class TestListIdentities:
    def test_table_lists_both_layers(self, capsys):
        assert run(["list-identities"]) == 0
        text = capsys.readouterr().out
        assert "eq13" in text
        assert "thm3.3" in text
        assert "delta-from-lambda" in text

    def test_json(self, capsys):
        assert run(["list-identities", "--format", "json"]) == 0
        obj = json.loads(capsys.readouterr().out)
        names = {entry["name"] for entry in obj["identities"]}
        assert {"eq13", "cor-sigmak", "compmult-distr"} <= names
        layers = {entry["layer"] for entry in obj["identities"]}
        assert layers == {"exact", "series"}


class TestUsage:
    def test_no_args(self, capsys):
        assert run([]) == 2

    def test_help_exits_zero(self, capsys):
        assert run(["--help"]) == 0

    def test_subcommand_help(self, capsys):
        assert run(["verify", "--help"]) == 0


class TestJsonRoundTripsViaCli:
    def test_verification_report(self, capsys):
        assert run(["verify", "eq14", "--limit", "300", "--format", "json"]) == 0
        text = capsys.readouterr().out
        r = VerificationReport.from_json(text)
        assert r.to_json() == json.dumps(json.loads(text))
