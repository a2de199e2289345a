"""Exact feasibility and the pruned exhaustive search vs the naive oracle."""

from __future__ import annotations

from fractions import Fraction

import pytest

from sharpmap import (
    Support,
    enumerate_naive,
    enumerate_sharp,
    f,
    feasible,
    is_map_polynomial,
    minimal_terms,
    mod6,
    q,
    uniqueness_status,
)
from sharpmap.search import (
    FAILS,
    UNIQUE,
    UNIQUE_UP_TO_EQUIVALENCE,
    UNKNOWN,
    monomial_universe,
    solve_support_system,
)


def support_of(p):
    return tuple(sorted(p.terms.keys(), key=lambda m: (m[0] + m[1], m)))


def canonical_class(monomials):
    direct = tuple(sorted(monomials, key=lambda m: (m[0] + m[1], m)))
    mirrored = tuple(sorted(((b, a) for a, b in monomials),
                            key=lambda m: (m[0] + m[1], m)))
    return min(direct, mirrored)


class TestFeasible:
    def test_f7_support_is_a_point(self):
        res = feasible(Support(7, support_of(f(7))))
        assert res.status == "point"
        assert sorted(res.coefficients) == [1, 1, 7, 7, 14]

    def test_degree2_point(self):
        res = feasible(Support(2, ((2, 0), (1, 1), (0, 1))))
        assert res.status == "point"
        assert res.coefficients == (Fraction(1), Fraction(1), Fraction(1))

    def test_degree1_pair(self):
        res = feasible(Support(1, ((1, 0), (0, 1))))
        assert res.status == "point" and res.coefficients == (Fraction(1), Fraction(1))

    def test_degree_mismatch_rejected(self):
        with pytest.raises(ValueError):
            Support(3, ((1, 0), (0, 1)))

    def test_x_y_xy_support_infeasible(self):
        # the only solution forces the xy coefficient to zero
        res = feasible(Support(2, ((1, 0), (0, 1), (1, 1))))
        assert res.status == "infeasible"

    def test_missing_pure_terms_rejected(self):
        with pytest.raises(ValueError):
            Support(2, ((1, 1), (2, 0)))  # no x-exponent-0 term

    def test_polytope_detected(self):
        res = feasible(Support(2, ((2, 0), (1, 1), (0, 2), (0, 1))))
        assert res.status == "polytope"
        assert res.freedom == 1
        assert all(c > 0 for c in res.coefficients)

    def test_infeasible_zero_forced(self):
        # x^2 + x + y support forces the x coefficient to vanish
        res = solve_support_system(((2, 0), (1, 0), (0, 1)), 2)
        assert res.status == "infeasible"

    def test_deterministic(self):
        support = Support(2, ((2, 0), (1, 1), (0, 2), (0, 1)))
        first = feasible(support)
        for _ in range(3):
            again = feasible(support)
            assert again.status == first.status
            assert again.coefficients == first.coefficients


class TestEnumerate:
    def test_degree3_unique_class(self):
        witnesses, exhaustive, _ = enumerate_sharp(3, 3)
        assert exhaustive
        assert [w.polynomial for w in witnesses] == [f(3)]

    def test_degree5_unique_class(self):
        witnesses, exhaustive, _ = enumerate_sharp(5, 4)
        assert exhaustive
        assert len(witnesses) == 1
        assert witnesses[0].polynomial in (f(5), f(5).swap_xy())

    def test_degree7_contains_all_three_constructions(self):
        witnesses, exhaustive, _ = enumerate_sharp(7, 5)
        assert exhaustive
        found = {canonical_class(w.support.monomials) for w in witnesses}
        for p in (f(7), q(7), mod6(1)):
            assert canonical_class(support_of(p)) in found

    def test_soundness(self):
        witnesses, _, _ = enumerate_sharp(6, 5)
        for w in witnesses:
            assert is_map_polynomial(w.polynomial)
            assert w.polynomial.degree() == 6
            assert w.polynomial.term_count() == 5

    def test_matches_naive_oracle_small_degrees(self):
        # around the sharp size for each degree; larger supports are all
        # rank-deficient and exercised separately
        for d in range(1, 6):
            n_min = (d + 4) // 2
            for n in range(2, n_min + 1):
                pruned, exhaustive, _ = enumerate_sharp(d, n)
                assert exhaustive
                naive = enumerate_naive(d, n)
                pruned_classes = {canonical_class(w.support.monomials) for w in pruned}
                naive_classes = {canonical_class(w.support.monomials) for w in naive}
                assert pruned_classes == naive_classes, (d, n)

    def test_matches_naive_oracle_above_sharp_size(self):
        # one rank-deficient size: polytopes appear in both enumerations
        pruned, _, _ = enumerate_sharp(4, 5)
        naive = enumerate_naive(4, 5)
        pruned_classes = {canonical_class(w.support.monomials) for w in pruned}
        naive_classes = {canonical_class(w.support.monomials) for w in naive}
        assert pruned_classes == naive_classes
        assert any(w.freedom > 0 for w in pruned)

    def test_swap_orbit_bookkeeping(self):
        witnesses, _, _ = enumerate_sharp(7, 5)
        enumerated = {w.support.monomials for w in witnesses}
        for w in witnesses:
            mirrored = canonical_class(tuple((b, a) for a, b in w.support.monomials))
            assert mirrored in {canonical_class(s) for s in enumerated}

    def test_shards_do_not_change_output(self):
        serial, _, _ = enumerate_sharp(6, 5, shards=1)
        parallel, _, _ = enumerate_sharp(6, 5, shards=3)
        assert [w.support.monomials for w in serial] == \
            [w.support.monomials for w in parallel]
        assert [w.polynomial for w in serial] == [w.polynomial for w in parallel]


class TestPruningRules:
    """Every pruned support must be infeasible (validated at d <= 5)."""

    def test_no_top_degree_monomial(self):
        for d in (3, 4, 5):
            universe = [m for m in monomial_universe(d) if m[0] + m[1] < d]
            from itertools import combinations
            for combo in combinations(universe, 3):
                res = solve_support_system(combo, d)
                if res.feasible:
                    poly_degree = max(a + b for a, b in combo)
                    assert poly_degree < d  # realizes a lower degree, not d

    def test_missing_pure_term_is_infeasible(self):
        from itertools import combinations
        for d in (2, 3, 4, 5):
            universe = monomial_universe(d)
            for combo in combinations(universe, 3):
                has_pure_x = any(b == 0 for _, b in combo)
                has_pure_y = any(a == 0 for a, _ in combo)
                if not (has_pure_x and has_pure_y):
                    assert not solve_support_system(combo, d).feasible, combo

    def test_top_slice_parity_rule(self):
        from itertools import combinations
        for d in (3, 4, 5):
            universe = monomial_universe(d)
            for combo in combinations(universe, 3):
                top = [(a, b) for a, b in combo if a + b == d]
                if top and len({b % 2 for _, b in top}) == 1:
                    res = solve_support_system(combo, d)
                    if res.feasible:
                        realized = max(a + b for (a, b), c in
                                       zip(combo, res.coefficients) if c)
                        assert realized < d


class TestMinimalTerms:
    def test_degree1(self):
        assert minimal_terms(1).min_terms == 2

    def test_degree2(self):
        assert minimal_terms(2).min_terms == 3

    def test_degree4(self):
        assert minimal_terms(4).min_terms == 4

    def test_degree7(self):
        assert minimal_terms(7).min_terms == 5


class TestUniqueness:
    def test_degree1_unique(self):
        assert uniqueness_status(1).status == UNIQUE

    def test_degree3_unique(self):
        result = uniqueness_status(3)
        assert result.status == UNIQUE
        assert result.distinct_polynomials == (f(3),)

    def test_degree5_up_to_equivalence(self):
        result = uniqueness_status(5)
        assert result.status == UNIQUE_UP_TO_EQUIVALENCE
        assert len(result.distinct_polynomials) == 2
        assert set(result.distinct_polynomials) == {f(5), f(5).swap_xy()}

    def test_degree7_fails_with_three_witnesses(self):
        result = uniqueness_status(7)
        assert result.status == FAILS
        assert result.class_count >= 3
        assert len(result.distinct_polynomials) >= 3

    def test_even_degrees_fail(self):
        assert uniqueness_status(2).status == FAILS
        assert uniqueness_status(4).status == FAILS

    def test_budget_exhaustion_reports_unknown(self):
        result = uniqueness_status(9, budget_seconds=0.05)
        assert result.status == UNKNOWN
        assert result.certificate is None

    def test_budget_exhaustion_partial_enumeration(self):
        witnesses, exhaustive, stats = enumerate_sharp(9, 6, budget_seconds=0.05)
        assert not exhaustive
        assert stats.examined + stats.pruned > 0
