"""Lower bounds, the integral identity, and the reference table report."""
import math
from fractions import Fraction

import pytest

from folbend.bounds import (
    DEFAULT_CHECK_PAIRS,
    DEFAULT_TABLE_ROWS,
    BoundCase,
    einstein_lower_bound,
    integral_formula_check,
    lower_bound,
    minimizer_report,
    table1_report,
)
from folbend.quadrature import QuadratureConfig
from folbend.spaces import parse_focal, parse_space, ricci_curvature

TIGHT = QuadratureConfig(rel_tol=1e-12, abs_tol=1e-14)


class TestLowerBound:
    @pytest.mark.parametrize("space,q,case,coeff,value", [
        ("S:3", 1, BoundCase.I_Q1, Fraction(1, 2), 1.0),
        ("S:3", 2, BoundCase.I_CODIM1, Fraction(1, 2), 1.0),
        ("S:4", 2, BoundCase.II_HALF, Fraction(1, 2), 2.0),
        ("S:6", 2, BoundCase.III_LOW, Fraction(1, 6), 4.0 / 3.0),
        ("S:6", 2, BoundCase.III_HIGH, Fraction(1, 2), 4.0),
        ("S:6", 4, BoundCase.III_LOW, Fraction(1, 2), 4.0),
        ("HP:2", 7, BoundCase.I_CODIM1, Fraction(1, 12), 7.0 / 12.0),
        ("CP:2", 2, BoundCase.II_HALF, Fraction(1, 2), 2.0),
    ])
    def test_values(self, space, q, case, coeff, value):
        b = lower_bound(parse_space(space), q, case)
        assert b.coefficient == coeff
        assert b.value == pytest.approx(value, rel=1e-12)

    def test_scales_with_curvature(self):
        b1 = lower_bound(parse_space("S:5", 1.0), 2, BoundCase.III_LOW)
        b3 = lower_bound(parse_space("S:5", 3.0), 2, BoundCase.III_LOW)
        assert b3.value == pytest.approx(3 * b1.value)

    @pytest.mark.parametrize("q,case", [
        (2, BoundCase.I_Q1),        # q must be 1
        (1, BoundCase.I_CODIM1),    # q must be n-1
        (2, BoundCase.II_HALF),     # 2q != 5
        (4, BoundCase.III_LOW),     # q > n-2
        (1, BoundCase.III_HIGH),    # q < 2
    ])
    def test_case_mismatch_rejected(self, q, case):
        with pytest.raises(ValueError):
            lower_bound(parse_space("S:5"), q, case)

    def test_leaf_dimension_range(self):
        s = parse_space("S:5")
        for q in (0, 5, -1, 2.0):
            with pytest.raises(ValueError):
                lower_bound(s, q, BoundCase.III_LOW)

    def test_needs_dimension_three(self):
        with pytest.raises(ValueError):
            lower_bound(parse_space("S:2"), 1, BoundCase.I_Q1)
        with pytest.raises(ValueError):
            einstein_lower_bound(parse_space("S:2"))


class TestEinsteinBound:
    @pytest.mark.parametrize("space", ["S:3", "S:4", "S:5", "S:6", "RP:3", "RP:4"])
    def test_equals_codimension_one_bound_on_constant_curvature(self, space):
        s = parse_space(space, 1.7)
        plain = lower_bound(s, s.dim - 1, BoundCase.I_CODIM1)
        assert einstein_lower_bound(s) == pytest.approx(plain.value, rel=1e-12)

    @pytest.mark.parametrize("space", ["CP:2", "CP:3", "HP:2", "HP:3", "CaP2"])
    def test_strictly_stronger_on_projective_families(self, space):
        s = parse_space(space)
        plain = lower_bound(s, s.dim - 1, BoundCase.I_CODIM1)
        assert einstein_lower_bound(s) > plain.value * 1.5

    def test_value(self):
        # HP:2: tau = 8 * 16, bound = 128 / (2 * 8 * 6)
        assert einstein_lower_bound(parse_space("HP:2")) == pytest.approx(4.0 / 3.0)


class TestIntegralFormula:
    @pytest.mark.parametrize("space,focal", DEFAULT_CHECK_PAIRS)
    def test_identity_on_all_finite_rows(self, space, focal):
        res = integral_formula_check(parse_space(space), parse_focal(focal), TIGHT)
        assert res.status == "applicable"
        assert res.lhs == pytest.approx(ricci_curvature(parse_space(space)))
        assert res.relative_gap <= 1e-6
        assert res.holds

    def test_at_least_eight_finite_rows(self):
        assert len(DEFAULT_CHECK_PAIRS) >= 8

    def test_divergent_row_is_not_applicable(self):
        res = integral_formula_check(parse_space("CP:2"), parse_focal("point"), TIGHT)
        assert res.status == "not-applicable"
        assert not res.holds
        assert res.lhs == pytest.approx(6.0)
        # the right side still converges here, to a value far from Ric
        assert res.rhs == pytest.approx(2.0, rel=1e-9)

    def test_identity_scales_with_curvature(self):
        res = integral_formula_check(parse_space("HP:2", 2.0), parse_focal("point"), TIGHT)
        assert res.lhs == pytest.approx(32.0)
        assert res.relative_gap <= 1e-6


class TestTableReport:
    def test_default_table_reproduces(self):
        report = table1_report(quad=TIGHT)
        assert report.all_ok
        assert len(report.rows) == len(DEFAULT_TABLE_ROWS) == 19
        statuses = {row.status for row in report.rows}
        assert statuses == {"Reproduced", "DivergenceConfirmed", "NotComputable"}

    def test_row_contents(self):
        report = table1_report(quad=TIGHT)
        by_key = {(r.space, r.focal): r for r in report.rows}
        finite = by_key[("CaP2", "point")]
        assert finite.closed_form == Fraction(139, 21)
        assert finite.relative_error <= 1e-5
        div = by_key[("S:2", "point")]
        assert div.divergent_endpoint == "both"
        assert 0.9 <= div.exponent_estimate <= 1.1
        nc = by_key[("CP:2", "sub:RP:2")]
        assert nc.status == "NotComputable"

    def test_scaled_curvature(self):
        report = table1_report(lam=2.0, quad=TIGHT)
        assert report.all_ok
        row = {(r.space, r.focal): r for r in report.rows}[("S:5", "sub:S:2")]
        assert row.expected == pytest.approx(12.0)

    def test_wrong_closed_form_fails(self):
        report = table1_report(quad=TIGHT, rows=[("S:3", "point", Fraction(2))])
        assert not report.all_ok
        assert report.rows[0].status == "Failed"

    def test_wrong_verdict_fails(self):
        report = table1_report(quad=TIGHT, rows=[("S:3", "point", "divergent")])
        assert report.rows[0].status == "Failed"
        report = table1_report(quad=TIGHT, rows=[("S:3", "point", "not computable")])
        assert report.rows[0].status == "Failed"

    def test_rejects_bad_curvature(self):
        for lam in (0.0, -1.0, math.inf):
            with pytest.raises(ValueError):
                table1_report(lam=lam)


class TestMinimizerReport:
    @pytest.mark.parametrize("space", ["S:3", "S:4", "S:5", "S:6", "RP:3", "RP:4"])
    def test_round_spheres_attain_the_bound(self, space):
        rep = minimizer_report(parse_space(space), TIGHT)
        assert rep.attains_bound
        assert abs(rep.slack) <= 1e-8
        assert rep.leaves_umbilical and rep.leaves_integrable
        assert "attained" in rep.note

    def test_quaternionic_spheres_do_not(self):
        rep = minimizer_report(parse_space("HP:2"), TIGHT)
        assert not rep.attains_bound
        assert rep.slack == pytest.approx(16.0 / 3.0 - 7.0 / 12.0, rel=1e-9)
        assert not rep.leaves_umbilical
        assert "strict" in rep.note

    def test_divergent_bending_is_vacuous(self):
        rep = minimizer_report(parse_space("CP:2"), TIGHT)
        assert not rep.attains_bound
        assert rep.slack is None
        assert "vacuous" in rep.note

    def test_scaled_curvature_still_attains(self):
        rep = minimizer_report(parse_space("S:4", 2.5), TIGHT)
        assert rep.attains_bound
        assert rep.bound.value == pytest.approx(2.5 * 0.75)

    def test_small_spaces_rejected(self):
        with pytest.raises(ValueError):
            minimizer_report(parse_space("S:2"))


def test_every_minimizer_space_is_cataloged():
    # the report runs on every catalog space of dimension >= 3
    for label in ("S:3", "S:6", "RP:3", "RP:5", "CP:2", "CP:4", "HP:2", "HP:3", "CaP2"):
        rep = minimizer_report(parse_space(label))
        assert rep.bound.value > 0
