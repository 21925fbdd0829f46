"""End-to-end CLI behavior: output formats, round-trips, exit codes."""

import json
from fractions import Fraction

import pytest

from acpolys.cli import canonical_json, latex_polynomial, run
from acpolys.exact_core import Polynomial, poly_from_json, poly_to_json

F = Fraction


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestLatex:
    def test_common_denominator_golden(self, capsys):
        code, out, _ = invoke(
            capsys, "poly", "--family", "c", "--n", "3",
            "--route", "recurrence", "--format", "latex",
        )
        assert code == 0
        assert out.strip() == r"\frac{3X^4+4X^2+1}{4}"

    def test_linear(self):
        assert latex_polynomial(Polynomial([0, 1])) == "X"
        assert latex_polynomial(Polynomial([])) == "0"
        assert latex_polynomial(Polynomial([5])) == "5"

    def test_integer_polynomial_no_fraction_wrapper(self):
        assert latex_polynomial(Polynomial([-1, 2])) == "2X-1"
        assert latex_polynomial(Polynomial([1, 0, -1])) == "-X^2+1"

    def test_common_denominator_with_negative_lead(self):
        p = Polynomial([F(1, 2), 0, F(-3, 4)])
        assert latex_polynomial(p) == r"\frac{-3X^2+2}{4}"

    def test_unit_coefficients_elided(self):
        assert latex_polynomial(Polynomial([0, 0, 1])) == "X^2"
        assert latex_polynomial(Polynomial([0, -1])) == "-X"

    def test_high_powers_braced(self):
        assert latex_polynomial(Polynomial.monomial(12)) == "X^{12}"

    def test_huge_denominator_falls_back_to_per_term(self):
        p = Polynomial([F(1, 10**7), 1])
        assert latex_polynomial(p) == r"X+\frac{1}{10000000}"


class TestPolyCommand:
    def test_json_round_trip_is_byte_identical(self, capsys):
        code, out, _ = invoke(capsys, "poly", "--family", "a", "--n", "6")
        assert code == 0
        doc = json.loads(out)
        rebuilt = poly_from_json(doc["coefficients"])
        re_emitted = canonical_json(
            {
                "family": doc["family"],
                "n": doc["n"],
                "route": doc["route"],
                "coefficients": poly_to_json(rebuilt),
            }
        )
        assert re_emitted == out.strip()

    def test_routes_agree_through_cli(self, capsys):
        outputs = set()
        for route in (
            "recurrence",
            "closed_form",
            "coefficient_formula",
            "generating_function",
            "residue_recurrence",
        ):
            code, out, _ = invoke(
                capsys, "poly", "--family", "a", "--n", "5", "--route", route
            )
            assert code == 0
            outputs.add(tuple(json.loads(out)["coefficients"]))
        assert len(outputs) == 1

    def test_csv_lists_all_coefficients(self, capsys):
        code, out, _ = invoke(
            capsys, "poly", "--family", "c", "--n", "1", "--format", "csv"
        )
        assert code == 0
        assert out.splitlines() == ["0,1/2", "1,0", "2,1/2"]

    def test_no_floats_in_exact_output(self, capsys):
        _, out, _ = invoke(capsys, "poly", "--family", "c", "--n", "7")
        assert "." not in out


class TestNumbersCommand:
    def test_bernoulli_csv(self, capsys):
        code, out, _ = invoke(
            capsys, "numbers", "--kind", "bernoulli", "--max-n", "4",
            "--format", "csv",
        )
        assert code == 0
        assert out.splitlines() == ["0,1", "1,-1/2", "2,1/6", "3,0", "4,-1/30"]

    def test_tangent_json(self, capsys):
        code, out, _ = invoke(
            capsys, "numbers", "--kind", "tangent", "--max-n", "7"
        )
        doc = json.loads(out)
        assert doc["values"] == ["0", "1/2", "0", "1/4", "0", "1/2", "0", "17/8"]

    def test_cosecant_json(self, capsys):
        _, out, _ = invoke(capsys, "numbers", "--kind", "cosecant", "--max-n", "4")
        assert json.loads(out)["values"] == ["1", "0", "1/3", "0", "7/15"]


class TestCoeffsCommand:
    def test_uv_csv_golden_row(self, capsys):
        code, out, _ = invoke(
            capsys, "coeffs", "uv", "--max-n", "1", "--format", "csv"
        )
        assert code == 0
        assert out.strip() == "1,1,0,1"

    def test_uv_csv_row_four(self, capsys):
        _, out, _ = invoke(capsys, "coeffs", "uv", "--max-n", "4", "--format", "csv")
        assert "4,1,10/3,20/3" in out.splitlines()
        assert "4,2,7/3,8/3" in out.splitlines()

    def test_alpha_lambda_csv(self, capsys):
        _, out, _ = invoke(
            capsys, "coeffs", "alpha-lambda", "--max-n", "2", "--format", "csv"
        )
        assert "2,1,1/3,2/3" in out.splitlines()

    def test_alpha_lambda_json_shape(self, capsys):
        _, out, _ = invoke(capsys, "coeffs", "alpha-lambda", "--max-n", "1")
        doc = json.loads(out)
        row1 = doc["rows"][1]
        assert row1["alpha"] == ["0", "0", "1/2"]
        assert row1["lambda"] == ["1/2", "0", "1/2"]


class TestVerifyCommand:
    def test_identities_trivial_case_passes(self, capsys):
        code, out, _ = invoke(capsys, "verify", "identities", "--max-n", "0")
        assert code == 0
        doc = json.loads(out)
        assert doc["summary"]["failed"] == 0
        assert doc["summary"]["errors"] == 0

    def test_uv_small(self, capsys):
        code, out, _ = invoke(capsys, "verify", "uv", "--max-n", "5")
        assert code == 0
        assert json.loads(out)["summary"]["failed"] == 0

    def test_integrals_single_suite(self, capsys):
        code, out, _ = invoke(
            capsys, "verify", "integrals", "--suite", "classical"
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["summary"] == {
            "total": 3, "passed": 3, "failed": 0, "errors": 0,
        }

    def test_failing_check_exits_one(self, capsys):
        code, out, _ = invoke(
            capsys, "verify", "integrals", "--suite", "eigen",
            "--tolerance", "1e-18",
        )
        assert code == 1
        assert json.loads(out)["summary"]["failed"] > 0

    def test_csv_report_format(self, capsys):
        code, out, _ = invoke(
            capsys, "verify", "uv", "--max-n", "2", "--format", "csv"
        )
        assert code == 0
        for line in out.splitlines():
            assert line.startswith("uv,")


class TestUsageErrors:
    def test_residue_route_for_c_family(self, capsys):
        code, _, err = invoke(
            capsys, "poly", "--family", "c", "--n", "3",
            "--route", "residue_recurrence",
        )
        assert code == 2
        assert "residue" in err

    def test_uv_zero_rows(self, capsys):
        code, _, err = invoke(capsys, "verify", "uv", "--max-n", "0")
        assert code == 2
        assert "error" in err

    def test_unknown_subcommand(self):
        with pytest.raises(SystemExit) as exc:
            run(["frobnicate"])
        assert exc.value.code == 2

    def test_unknown_format(self):
        with pytest.raises(SystemExit) as exc:
            run(["poly", "--family", "a", "--n", "1", "--format", "yaml"])
        assert exc.value.code == 2

    def test_verify_rejects_latex(self):
        with pytest.raises(SystemExit) as exc:
            run(["verify", "identities", "--format", "latex"])
        assert exc.value.code == 2


class TestSelftest:
    def test_deterministic_and_passing(self, capsys):
        code1, out1, _ = invoke(capsys, "selftest", "--max-n", "2")
        code2, out2, _ = invoke(capsys, "selftest", "--max-n", "2")
        assert code1 == code2 == 0
        assert out1 == out2
        doc = json.loads(out1)
        assert doc["summary"]["failed"] == 0
        assert doc["summary"]["errors"] == 0
        assert {r["suite"] for r in doc["reports"]} == {
            "identities", "uv", "integrals/all",
        }
