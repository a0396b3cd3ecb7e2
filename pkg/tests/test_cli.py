import json
import subprocess
import sys

import pytest

from scepoly.cli import (
    main,
    poly_from_json,
    poly_to_json,
    render_closed_form_text,
    render_poly_latex,
    render_poly_text,
    render_series_text,
)
from scepoly.families import e_explicit, em_explicit, family_poly, s_explicit
from scepoly.genfunc import series_C, series_S
from scepoly.integrals import closed_form
from scepoly.poly import Poly

X = Poly.x()


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestDocumentedOutputs:
    """The documented commands must produce these outputs byte-for-byte."""

    def test_poly_e_2_text(self, capsys):
        code, out, _ = run_cli(capsys, "poly", "e", "--n", "2", "--format", "text")
        assert code == 0
        assert out == "x^2 - 2x + 2\n"

    def test_poly_em_1_text(self, capsys):
        code, out, _ = run_cli(capsys, "poly", "em", "--n", "1", "--m", "3", "--format", "text")
        assert code == 0
        assert out == "3x - 1\n"

    def test_poly_e_0_json(self, capsys):
        code, out, _ = run_cli(capsys, "poly", "e", "--n", "0", "--format", "json")
        assert code == 0
        assert out == '{"family":"e","n":0,"coeffs":[{"re":"1","im":"0"}]}\n'

    def test_integrate_exp_2_closed_form(self, capsys):
        code, out, _ = run_cli(capsys, "integrate", "--kind", "exp", "--n", "2")
        assert code == 0
        assert out == "(x^2 - 2x + 2) e^x + C\n"

    def test_genfunc_e_order_1(self, capsys):
        code, out, _ = run_cli(capsys, "genfunc", "--family", "e", "--order", "1")
        assert code == 0
        assert out == "1 + (x - 1) t\n"

    def test_genfunc_s_order_0(self, capsys):
        code, out, _ = run_cli(capsys, "genfunc", "--family", "s", "--order", "0")
        assert code == 0
        assert out == "-1\n"

    def test_genfunc_c_order_2(self, capsys):
        code, out, _ = run_cli(capsys, "genfunc", "--family", "c", "--order", "2")
        assert code == 0
        assert out == "1 + x t + (x^2/2 - 1) t^2\n"


class TestJsonRoundTrip:
    @pytest.mark.parametrize(
        "family,n,m",
        [("e", 0, None), ("e", 7, None), ("s", 6, None), ("shat", 4, None), ("em", 5, "2/3")],
    )
    def test_round_trip(self, family, n, m):
        from fractions import Fraction

        rate = Fraction(m) if m else None
        p = family_poly(family, n, rate)
        text = poly_to_json(family, n, p, rate)
        assert poly_from_json(text) == p

    def test_schema_keys(self):
        doc = json.loads(poly_to_json("em", 2, em_explicit(2, 3), m=3))
        assert list(doc) == ["family", "n", "m", "coeffs"]
        assert doc["m"] == "3"
        assert all(set(c) == {"re", "im"} for c in doc["coeffs"])

    def test_rationals_survive_as_strings(self):
        from fractions import Fraction

        p = family_poly("em", 3, Fraction(1, 3))
        doc = json.loads(poly_to_json("em", 3, p, Fraction(1, 3)))
        assert doc["coeffs"][3]["re"] == "1/27"


class TestRenderers:
    def test_zero_polynomial(self):
        assert render_poly_text(Poly.zero()) == "0"

    def test_negative_leading_term(self):
        assert render_poly_text(s_explicit(2)) == "-x^2 + 2"

    def test_fraction_in_constant(self):
        from fractions import Fraction

        assert render_poly_text(Poly.constant(Fraction(-1, 4))) == "-1/4"

    def test_fraction_with_numerator(self):
        from fractions import Fraction

        assert render_poly_text(Poly([0, 0, Fraction(3, 2)])) == "3x^2/2"

    def test_latex_descending(self):
        assert render_poly_latex(e_explicit(2)) == "x^{2} - 2x + 2"

    def test_latex_fraction(self):
        from fractions import Fraction

        assert render_poly_latex(Poly([1, Fraction(-1, 2)])) == r"-\frac{1}{2} x + 1"

    def test_series_with_negative_terms(self):
        assert render_series_text(series_S(1)) == "-1 - x t"

    def test_series_zero(self):
        from scepoly.genfunc import FormalSeries

        assert render_series_text(FormalSeries.zero(3)) == "0"

    def test_closed_form_sin_n1(self):
        assert render_closed_form_text(closed_form("sin", 1)) == "-x cos x + sin x + C"

    def test_closed_form_sin_n0(self):
        assert render_closed_form_text(closed_form("sin", 0)) == "-cos x + C"

    def test_closed_form_exp_rates(self):
        from fractions import Fraction

        assert render_closed_form_text(closed_form("exp", 0, 2)) == "1/2 e^(2x) + C"
        assert (
            render_closed_form_text(closed_form("exp", 0, Fraction(-1)))
            == "-e^(-x) + C"
        )


class TestExitCodes:
    def test_unknown_family_is_usage_error(self, capsys):
        code, _, _ = run_cli(capsys, "poly", "q", "--n", "2")
        assert code == 2

    def test_zero_rate_is_usage_error(self, capsys):
        code, _, err = run_cli(capsys, "integrate", "--kind", "exp", "--n", "1", "--m", "0")
        assert code == 2
        assert "nonzero" in err

    def test_malformed_rate(self, capsys):
        code, _, err = run_cli(capsys, "poly", "em", "--n", "1", "--m", "3/0")
        assert code == 2

    def test_em_without_rate(self, capsys):
        code, _, _ = run_cli(capsys, "poly", "em", "--n", "1")
        assert code == 2

    def test_m_rejected_for_sin(self, capsys):
        code, _, _ = run_cli(capsys, "integrate", "--kind", "sin", "--n", "1", "--m", "2")
        assert code == 2

    def test_negative_index(self, capsys):
        code, _, _ = run_cli(capsys, "poly", "e", "--n", "-3")
        assert code == 2

    def test_bad_suite_name(self, capsys):
        code, _, _ = run_cli(capsys, "verify", "--suite", "bogus")
        assert code == 2

    def test_missing_bound(self, capsys):
        code, _, _ = run_cli(capsys, "integrate", "--kind", "sin", "--n", "1", "--a", "0")
        assert code == 2

    def test_max_n_cap_from_environment(self, capsys, monkeypatch):
        monkeypatch.setenv("SCE_MAX_N", "10")
        code, _, err = run_cli(capsys, "poly", "e", "--n", "11")
        assert code == 2
        assert "SCE_MAX_N" in err

    def test_cap_allows_at_limit(self, capsys, monkeypatch):
        monkeypatch.setenv("SCE_MAX_N", "10")
        code, _, _ = run_cli(capsys, "poly", "e", "--n", "10")
        assert code == 0


class TestIntegrateCommand:
    def test_definite_value(self, capsys):
        code, out, _ = run_cli(
            capsys, "integrate", "--kind", "sin", "--n", "1", "--a", "0", "--b", "3.14159265358979"
        )
        assert code == 0
        assert abs(float(out) - 3.14159265) < 1e-6

    def test_check_passes(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "integrate", "--kind", "sin", "--n", "1",
            "--a", "0", "--b", "3.14159265358979", "--check",
        )
        assert code == 0
        assert "PASS" in out

    def test_check_exp_rate(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "integrate", "--kind", "exp", "--n", "3", "--m", "2",
            "--a", "-2", "--b", "1.5", "--check",
        )
        assert code == 0
        assert "PASS" in out

    def test_reversed_bounds(self, capsys):
        code_fwd, out_fwd, _ = run_cli(
            capsys, "integrate", "--kind", "cos", "--n", "2", "--a", "0", "--b", "2"
        )
        code_rev, out_rev, _ = run_cli(
            capsys, "integrate", "--kind", "cos", "--n", "2", "--a", "2", "--b", "0"
        )
        assert code_fwd == code_rev == 0
        assert float(out_fwd) == pytest.approx(-float(out_rev))


class TestVerifyCommand:
    def test_routes_suite(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--suite", "routes", "--max-n", "10")
        assert code == 0
        assert "FAIL" not in out
        assert "0 failed" in out

    def test_all_suites_base_cases(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--suite", "all", "--max-n", "0")
        assert code == 0
        assert "0 failed" in out

    @pytest.mark.parametrize(
        "suite", ["recurrences", "odes", "genfunc", "laguerre", "theorem1", "theorem2"]
    )
    def test_each_suite_passes(self, capsys, suite):
        code, out, _ = run_cli(capsys, "verify", "--suite", suite, "--max-n", "6")
        assert code == 0, out


class TestGenfuncCommand:
    def test_em_with_rate(self, capsys):
        code, out, _ = run_cli(
            capsys, "genfunc", "--family", "em", "--m", "2", "--order", "1"
        )
        assert code == 0
        assert out == "1 + (2x - 1) t\n"

    def test_json_format(self, capsys):
        code, out, _ = run_cli(
            capsys, "genfunc", "--family", "e", "--order", "2", "--format", "json"
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["order"] == 2
        assert len(doc["coeffs"]) == 3

    def test_csv_format(self, capsys):
        code, out, _ = run_cli(
            capsys, "genfunc", "--family", "s", "--order", "1", "--format", "csv"
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "t_power,degree,re_num,re_den,im_num,im_den"


class TestConsoleEntry:
    def test_module_invocation(self):
        proc = subprocess.run(
            [sys.executable, "-m", "scepoly.cli", "poly", "e", "--n", "2"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert proc.stdout == "x^2 - 2x + 2\n"

    def test_poly_csv_layout(self, capsys):
        code, out, _ = run_cli(capsys, "poly", "e", "--n", "1", "--format", "csv")
        assert code == 0
        assert out.splitlines() == [
            "degree,re_num,re_den,im_num,im_den",
            "0,-1,1,0,1",
            "1,1,1,0,1",
        ]
