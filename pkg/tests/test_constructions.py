"""The three replacement constructions and the scaled h-coefficients."""

from __future__ import annotations

from fractions import Fraction

import pytest

from sharpmap import (
    HCoefficient,
    Polynomial,
    equivalent,
    f,
    h,
    h_coeff_closed,
    h_coeff_inequality_holds,
    h_coeff_sum,
    h_with_trace,
    is_map_polynomial,
    mod6,
    mod6_with_trace,
    pell_ratio_site,
    poly2,
    q,
    q_with_trace,
    ratio4_construct,
    ratio4_construct_with_trace,
    ratio4_sites,
    restrict_to_hyperplane,
    solution_at,
)

from .oracles import sympy_h_term_count

Q7_EXPECTED = poly2({(7, 0): 1, (3, 1): 7, (3, 3): 7, (1, 3): 7, (0, 7): 1})
MOD6_1_EXPECTED = poly2({(7, 0): 1, (5, 1): Fraction(7, 2), (1, 1): Fraction(7, 2),
                         (1, 5): Fraction(7, 2), (0, 7): 1})
RATIO4_5_1_EXPECTED = f(11) \
    - poly2({(9, 1): 11, (7, 2): 44, (5, 3): 77}) \
    + poly2({(5, 1): 11, (5, 3): 55, (5, 5): 11})


class TestRatioTwoSites:
    def test_degree_7(self):
        assert pell_ratio_site(7) == 1

    def test_degree_5_has_none(self):
        assert pell_ratio_site(5) is None

    def test_degree_9_has_none(self):
        assert pell_ratio_site(9) is None

    def test_degree_97(self):
        # s = 48 - k where 97^2 = 12 k^2 + 1, so k = 28
        assert solution_at(12, 2).k == 28
        assert pell_ratio_site(97) == 20

    def test_sites_exist_exactly_at_pell_degrees(self):
        pell_degrees = {solution_at(12, m).d for m in range(1, 4)}
        for d in range(3, 1500, 2):
            site = pell_ratio_site(d)
            assert (site is not None) == (d in pell_degrees)

    def test_even_degree_rejected(self):
        with pytest.raises(ValueError):
            pell_ratio_site(8)


class TestQ:
    def test_q7_exact(self):
        assert q(7) == Q7_EXPECTED

    def test_q7_properties(self):
        p = q(7)
        assert p.term_count() == 5
        assert not equivalent(p, f(7))

    def test_q97(self):
        p = q(97)
        assert is_map_polynomial(p)
        assert p.term_count() == 50
        assert not equivalent(p, f(97))

    def test_trace_is_neutral_on_line(self):
        poly, step = q_with_trace(7)
        diff = Polynomial(2, step.consumed) - Polynomial(2, step.produced)
        assert restrict_to_hyperplane(diff).is_zero()

    def test_no_site_error(self):
        with pytest.raises(ValueError):
            q(9)


class TestH:
    def test_h2_coincides_with_q7(self):
        assert h(2) == q(7)

    def test_h3_new_monomials(self):
        p = h(3)
        assert p.coefficient((5, 1)) == 11
        assert p.coefficient((5, 5)) == 11
        assert p.term_count() == 7

    def test_properties_to_m12(self):
        for m in range(2, 13):
            p = h(m)
            assert is_map_polynomial(p)
            assert p.degree() == 4 * m - 1
            assert p.term_count() == 2 * m + 1
            assert not equivalent(p, f(4 * m - 1))
            assert p.coefficient((4 * m - 3, 1)) == 0
            assert p.coefficient((4 * m - 5, 2)) == 0

    def test_term_count_against_sympy_expansion(self):
        for m in (2, 3, 4):
            assert h(m).term_count() == sympy_h_term_count(m) == 2 * m + 1

    def test_trace_vanishes_on_line(self):
        _, step = h_with_trace(4)
        diff = Polynomial(2, step.consumed) - Polynomial(2, step.produced)
        assert restrict_to_hyperplane(diff).is_zero()

    def test_m_below_two_rejected(self):
        with pytest.raises(ValueError):
            h(1)


class TestHCoefficients:
    def test_first_two_vanish(self):
        assert h_coeff_closed(2, 1) == 0
        assert h_coeff_closed(3, 1) == 0
        assert h_coeff_closed(3, 2) == 0
        assert h_coeff_sum(3, 2) == 0

    def test_positive_case_matches_h(self):
        m, s = 5, 3
        value = h_coeff_closed(m, s)
        assert value == h_coeff_sum(m, s)
        assert value > 0
        assert value == 2 ** (4 * m - 1) * h(m).coefficient((4 * m - 1 - 2 * s, s))

    def test_closed_equals_sum_on_grid(self):
        for m in range(2, 15):
            for s in range(1, 2 * m):
                assert h_coeff_closed(m, s) == h_coeff_sum(m, s)

    def test_scaled_values_match_every_h_coefficient(self):
        for m in range(2, 9):
            p = h(m)
            scale = 2 ** (4 * m - 1)
            for s in range(1, 2 * m):
                assert h_coeff_closed(m, s) == scale * p.coefficient((4 * m - 1 - 2 * s, s))

    def test_record_type_validates(self):
        rec = HCoefficient.compute(6, 4)
        assert rec.value > 0
        assert HCoefficient.compute(6, 1).value == 0
        assert HCoefficient.compute(6, 2).value == 0

    def test_inequality_window(self):
        for m in range(4, 41):
            for s in range(3, m):
                assert h_coeff_inequality_holds(m, s)

    def test_range_errors(self):
        with pytest.raises(ValueError):
            h_coeff_closed(2, 0)
        with pytest.raises(ValueError):
            h_coeff_sum(2, 4)


class TestMod6:
    def test_k1_exact(self):
        assert mod6(1) == MOD6_1_EXPECTED

    def test_k1_three_distinct_degree7_examples(self):
        assert not equivalent(mod6(1), f(7))
        assert not equivalent(mod6(1), q(7))

    def test_properties_to_k8(self):
        for k in range(1, 9):
            p = mod6(k)
            assert is_map_polynomial(p)
            assert p.degree() == 6 * k + 1
            assert p.term_count() == 3 * k + 2
            assert not equivalent(p, f(6 * k + 1))

    def test_trace_vanishes_on_line(self):
        for k in (1, 2, 5):
            _, step = mod6_with_trace(k)
            diff = Polynomial(2, step.consumed) - Polynomial(2, step.produced)
            assert restrict_to_hyperplane(diff).is_zero()

    def test_invalid_k(self):
        with pytest.raises(ValueError):
            mod6(0)


class TestRatio4:
    def test_sites_bound_5(self):
        assert ratio4_sites(5) == [(5, 1)]

    def test_no_sites_below_5(self):
        assert ratio4_sites(4) == []

    def test_sites_match_direct_ratio_scan(self):
        from sharpmap import coefficient_ratio, f_coefficient
        direct = [(r, s) for r in range(1, 61) for s in range(1, r - 1)
                  if coefficient_ratio(r, s) == 4
                  and f_coefficient(r, s + 2) >= 2 * f_coefficient(r, s)]
        assert ratio4_sites(60) == direct

    def test_site_values_match_f11(self):
        from sharpmap import f_coefficient
        assert (f_coefficient(5, 1), f_coefficient(5, 2), f_coefficient(5, 3)) == (11, 44, 77)

    def test_construct_5_1(self):
        p = ratio4_construct(5, 1)
        assert p == RATIO4_5_1_EXPECTED
        assert p.term_count() == 7
        assert not equivalent(p, f(11))
        assert p.coefficient((5, 5)) == 11

    def test_construct_coincides_with_h3(self):
        assert ratio4_construct(5, 1) == h(3)

    def test_trace_vanishes_on_line(self):
        _, step = ratio4_construct_with_trace(5, 1)
        diff = Polynomial(2, step.consumed) - Polynomial(2, step.produced)
        assert restrict_to_hyperplane(diff).is_zero()

    def test_invalid_site_rejected(self):
        with pytest.raises(ValueError):
            ratio4_construct(5, 2)
        with pytest.raises(ValueError):
            ratio4_construct(4, 1)
