"""Core polynomial arithmetic, membership predicates, and the map conversion."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest
import sympy

from sharpmap import (
    MembershipError,
    MonomialMap,
    Polynomial,
    Signature,
    UnsupportedArityError,
    check_sphere_numeric,
    equivalent,
    f,
    is_map_polynomial,
    is_one_on_hyperplane,
    poly2,
    q,
    restrict_to_hyperplane,
    signature,
    to_monomial_map,
)

from .oracles import random_polynomial, sympy_restriction

X_PLUS_Y = poly2({(1, 0): 1, (0, 1): 1})
F3 = poly2({(3, 0): 1, (1, 1): 3, (0, 3): 1})


class TestConstruction:
    def test_zero_coefficients_dropped(self):
        p = poly2({(1, 0): 1, (0, 1): 0})
        assert p.term_count() == 1

    def test_merging_in_constructor(self):
        p = Polynomial(2, [((1, 0), 1), ((1, 0), Fraction(1, 2))])
        assert p.coefficient((1, 0)) == Fraction(3, 2)

    def test_wrong_arity_exponent_rejected(self):
        with pytest.raises(ValueError):
            Polynomial(2, {(1, 0, 0): 1})

    def test_negative_exponent_rejected(self):
        with pytest.raises(ValueError):
            Polynomial(2, {(-1, 0): 1})

    def test_zero_polynomial_degree(self):
        assert Polynomial.zero(2).degree() == -1

    def test_canonical_order_is_graded_lex(self):
        p = poly2({(2, 0): 1, (0, 1): 1, (1, 1): 1})
        assert [e for e, _ in p.canonical_terms()] == [(0, 1), (1, 1), (2, 0)]


class TestArithmetic:
    def test_product(self):
        assert X_PLUS_Y * X_PLUS_Y == poly2({(2, 0): 1, (1, 1): 2, (0, 2): 1})

    def test_power(self):
        assert X_PLUS_Y ** 3 == poly2(
            {(3, 0): 1, (2, 1): 3, (1, 2): 3, (0, 3): 1})

    def test_cancellation(self):
        assert (X_PLUS_Y - X_PLUS_Y).is_zero()

    def test_scalar(self):
        assert 2 * X_PLUS_Y == poly2({(1, 0): 2, (0, 1): 2})

    def test_evaluate(self):
        p = poly2({(2, 0): 1, (0, 1): 2})
        assert p.evaluate([Fraction(1, 2), Fraction(1, 3)]) == Fraction(11, 12)


class TestRestriction:
    def test_x_plus_y_restricts_to_one(self):
        assert restrict_to_hyperplane(X_PLUS_Y) == Polynomial.constant(1, 1)

    def test_degree_two_example(self):
        p = poly2({(2, 0): 1, (1, 1): 1, (0, 1): 1})  # x^2 + xy + y
        assert restrict_to_hyperplane(p) == Polynomial.constant(1, 1)

    def test_x2_plus_2y_restriction(self):
        # x^2 + 2(1-x) = x^2 - 2x + 2
        p = poly2({(2, 0): 1, (0, 1): 2})
        expected = Polynomial(1, {(2,): 1, (1,): -2, (0,): 2})
        assert restrict_to_hyperplane(p) == expected

    def test_against_sympy(self):
        rng = random.Random(7)
        x = sympy.Symbol("x")
        for _ in range(25):
            p = random_polynomial(rng)
            ours = restrict_to_hyperplane(p)
            expr = sympy.Integer(0)
            for (e,), c in ours.terms.items():
                expr += sympy.Rational(c.numerator, c.denominator) * x ** e
            assert sympy.expand(expr - sympy_restriction(p)) == 0

    def test_one_variable_gives_constant(self):
        p = Polynomial(1, {(3,): 1, (0,): 2})
        r = restrict_to_hyperplane(p)
        assert r.nvars == 0 and r == Polynomial.constant(0, 3)

    def test_three_variables(self):
        # x + y + z -> 1 after z := 1 - x - y
        s3 = Polynomial(3, {(1, 0, 0): 1, (0, 1, 0): 1, (0, 0, 1): 1})
        assert restrict_to_hyperplane(s3) == Polynomial.constant(2, 1)

    def test_linearity(self):
        rng = random.Random(13)
        for _ in range(20):
            p, r = random_polynomial(rng), random_polynomial(rng)
            c = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
            assert restrict_to_hyperplane(p + r) == \
                restrict_to_hyperplane(p) + restrict_to_hyperplane(r)
            assert restrict_to_hyperplane(p * c) == restrict_to_hyperplane(p) * c


class TestMembership:
    def test_two_minus_s_is_on_hyperplane(self):
        p = poly2({(0, 0): 2, (1, 0): -1, (0, 1): -1})
        assert is_one_on_hyperplane(p)
        assert not is_map_polynomial(p)

    def test_x_plus_y_plus_one_is_not(self):
        assert not is_one_on_hyperplane(X_PLUS_Y + Polynomial.constant(2, 1))

    def test_f3(self):
        assert is_one_on_hyperplane(F3)
        assert is_map_polynomial(F3)

    def test_two_s_minus_one_not_in_cone(self):
        p = 2 * X_PLUS_Y - Polynomial.constant(2, 1)
        assert is_one_on_hyperplane(p)
        assert not is_map_polynomial(p)

    def test_zero_polynomial(self):
        assert not is_map_polynomial(Polynomial.zero(2))

    def test_membership_restriction_has_single_term(self):
        for p in (F3, X_PLUS_Y, f(9)):
            r = restrict_to_hyperplane(p)
            assert r.term_count() == 1 and r == Polynomial.constant(1, 1)


class TestSignature:
    def test_examples(self):
        s = X_PLUS_Y
        one = Polynomial.constant(2, 1)
        x = Polynomial.variable(2, 0)
        assert signature(2 * one - s) == Signature(1, 2)
        assert signature(one + x * (one - s)) == Signature(2, 2)
        assert signature(one - x * (one - s)) == Signature(3, 1)

    def test_zero(self):
        assert signature(Polynomial.zero(2)) == Signature(0, 0)


class TestEquivalence:
    def test_swap_pair(self):
        f5 = f(5)
        assert equivalent(f5, f5.swap_xy())

    def test_f7_vs_q7(self):
        assert not equivalent(f(7), q(7))

    def test_reflexive(self):
        assert equivalent(F3, F3)

    def test_rejects_other_arities(self):
        p3 = Polynomial(3, {(1, 0, 0): 1})
        with pytest.raises(UnsupportedArityError):
            equivalent(p3, p3)

    def test_equivalence_relation_on_random_inputs(self):
        rng = random.Random(99)
        polys = [random_polynomial(rng) for _ in range(12)]
        for p in polys:
            assert equivalent(p, p)
        for p in polys:
            for r in polys:
                assert equivalent(p, r) == equivalent(r, p)
        for p in polys:
            for r in polys:
                for t in polys:
                    if equivalent(p, r) and equivalent(r, t):
                        assert equivalent(p, t)


class TestMonomialMap:
    def test_identity_like(self):
        m = to_monomial_map(X_PLUS_Y)
        assert [c for _, c in m.components] == [1, 1]

    def test_f3_squared_coefficients(self):
        m = to_monomial_map(F3)
        assert sorted(c for _, c in m.components) == [1, 1, 3]

    def test_f7_squared_coefficients(self):
        m = to_monomial_map(f(7))
        assert sorted(c for _, c in m.components) == [1, 1, 7, 7, 14]

    def test_requires_cone_membership(self):
        with pytest.raises(MembershipError):
            to_monomial_map(2 * X_PLUS_Y - Polynomial.constant(2, 1))

    def test_component_count_matches_terms(self):
        for p in (X_PLUS_Y, F3, f(9), q(7)):
            assert to_monomial_map(p).term_count() == p.term_count()

    def test_duplicate_components_rejected(self):
        with pytest.raises(ValueError):
            MonomialMap(2, (((1, 0), Fraction(1)), ((1, 0), Fraction(1))))


class TestSphereCheck:
    def test_identity_map_residual(self):
        m = to_monomial_map(X_PLUS_Y)
        assert check_sphere_numeric(m, 100, seed=1) <= 1e-12

    def test_f7_residual(self):
        m = to_monomial_map(f(7))
        assert check_sphere_numeric(m, 1000, seed=1) <= 1e-10

    def test_perturbed_map_detected(self):
        comps = list(to_monomial_map(X_PLUS_Y).components)
        exp, c = comps[0]
        comps[0] = (exp, c + Fraction(1, 1000))
        bad = MonomialMap(2, tuple(comps))
        assert check_sphere_numeric(bad, 100, seed=1) >= 1e-4

    def test_deterministic_in_seed(self):
        m = to_monomial_map(f(5))
        assert check_sphere_numeric(m, 50, seed=3) == check_sphere_numeric(m, 50, seed=3)

    def test_huge_coefficient_fractions_are_handled(self):
        # hyperplane-one member whose coefficients have ~400-digit numerators,
        # exercising the mantissa/exponent evaluation path
        big = 10 ** 400
        p = poly2({(2, 0): 1, (1, 1): 2 - Fraction(1, big),
                   (0, 2): 1 - Fraction(1, big), (0, 1): Fraction(1, big)})
        assert is_map_polynomial(p)
        assert check_sphere_numeric(to_monomial_map(p), 50, seed=2) <= 1e-10

    def test_samples_validated(self):
        with pytest.raises(ValueError):
            check_sphere_numeric(to_monomial_map(X_PLUS_Y), 0, seed=1)


class TestJson:
    def test_round_trip_identity(self):
        for p in (F3, q(7), f(10), Polynomial.zero(2)):
            assert Polynomial.from_json(p.to_json()) == p

    def test_byte_identical_reserialization(self):
        text = q(97).to_json()
        assert Polynomial.from_json(text).to_json() == text

    def test_schema_shape(self):
        d = F3.to_json_dict()
        assert d["nvars"] == 2
        assert d["terms"][0] == {"exp": [1, 1], "coeff": "3/1"}

    def test_fraction_coefficients(self):
        from sharpmap import mod6
        p = mod6(1)
        again = Polynomial.from_json(p.to_json())
        assert again.coefficient((5, 1)) == Fraction(7, 2)
