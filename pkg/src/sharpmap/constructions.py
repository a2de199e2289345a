"""Constructions of sharp polynomials inequivalent to the f(d) family.

All three constructions rewrite a block of consecutive terms of f(d) using
an identity that holds on the line x + y = 1:

  * ``q(d)``      uses x^2 + 2y = 1 + y^2 at a site where consecutive
                  coefficients of f(d) have ratio exactly 2; such sites
                  exist precisely when d^2 = 12 k^2 + 1 (a Pell condition).
  * ``mod6(k)``   uses x^4 + 4x^2y + 2y^2 = 1 + y^4 at the site r = 3k,
                  s = 2k of f(6k+1), where the ratio is exactly 1/2.
  * ``ratio4_construct(r, s)`` uses the same quartic identity at sites
                  where the ratio is exactly 4 (tied to a^2 - 8b^2 = -7).
  * ``h(m)``      subtracts (4m-1) x^(2m-1) y (f(2m-2) - 1), which vanishes
                  on the line, from f(4m-1); covers every degree 3 mod 4.

Every construction records the consumed and produced terms in a
``ReplacementStep`` whose defining invariant (the difference vanishes on the
line) is verified exactly, and asserts membership, degree, term count and
inequivalence before returning.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .families import coefficient_ratio, f, f_coefficient
from .polynomial import (
    Polynomial,
    assert_term_bound,
    equivalent,
    is_map_polynomial,
    restrict_to_hyperplane,
)

TermList = tuple[tuple[tuple[int, int], Fraction], ...]

IDENTITY_QUADRATIC = "x^2 + 2y = 1 + y^2 on x+y=1"
IDENTITY_QUARTIC = "x^4 + 4x^2y + 2y^2 = 1 + y^4 on x+y=1"


@dataclass(frozen=True)
class ReplacementStep:
    """Record of one rewrite: terms removed, terms added, identity used."""

    consumed: TermList
    produced: TermList
    line_identity: str

    def validate(self) -> None:
        """The consumed-minus-produced difference must vanish on the line."""
        diff = Polynomial(2, self.consumed) - Polynomial(2, self.produced)
        if not restrict_to_hyperplane(diff).is_zero():
            raise AssertionError(f"replacement is not neutral on the line: {self}")

    def to_json_dict(self) -> dict:
        def encode(terms: TermList) -> list[dict]:
            return [{"exp": list(e), "coeff": f"{c.numerator}/{c.denominator}"}
                    for e, c in terms]

        return {
            "line_identity": self.line_identity,
            "consumed": encode(self.consumed),
            "produced": encode(self.produced),
        }


def _apply(base: Polynomial, step: ReplacementStep) -> Polynomial:
    step.validate()
    return base - Polynomial(2, step.consumed) + Polynomial(2, step.produced)


def _finalize(p: Polynomial, d: int, terms: int, label: str) -> Polynomial:
    if not is_map_polynomial(p):
        raise AssertionError(f"{label}: output has a negative coefficient or is not 1 on the line")
    if p.degree() != d:
        raise AssertionError(f"{label}: degree {p.degree()}, expected {d}")
    if p.term_count() != terms:
        raise AssertionError(f"{label}: {p.term_count()} terms, expected {terms}")
    if equivalent(p, f(d)):
        raise AssertionError(f"{label}: output is equivalent to f({d})")
    assert_term_bound(p)
    return p


# -- ratio-2 sites and q(d) ----------------------------------------------------


def pell_ratio_site(d: int) -> int | None:
    """The unique s with K(r, s+1) = 2 K(r, s) in f(d), when one exists.

    Writing d = 2r+1, the site is s = r - k where d^2 = 12 k^2 + 1; it
    exists precisely when (d^2 - 1) / 12 is a perfect square, i.e. when d is
    a member of the lambda = 12 Pell sequence 7, 97, 1351, ...
    """
    if d < 1 or d % 2 == 0:
        raise ValueError(f"degree must be a positive odd integer, got {d}")
    r = (d - 1) // 2
    if r < 2:
        return None
    t = d * d - 1
    if t % 12:
        return None
    k = math.isqrt(t // 12)
    if 12 * k * k != t:
        return None
    s = r - k
    if not 0 < s < r:
        return None
    if coefficient_ratio(r, s) != 2:
        raise AssertionError(f"ratio at claimed site ({r},{s}) is not 2")
    return s


def q_with_trace(d: int) -> tuple[Polynomial, ReplacementStep]:
    """The ratio-2 rewrite of f(d), with its replacement record.

    The two consecutive terms K x^(a) y^s + 2K x^(a-2) y^(s+1), a = 2r+1-2s,
    equal K x^(a-2) y^s (x^2 + 2y) and are replaced by
    K x^(a-2) y^s + K x^(a-2) y^(s+2).
    """
    s = pell_ratio_site(d)
    if s is None:
        raise ValueError(f"f({d}) has no consecutive-coefficient ratio equal to 2")
    r = (d - 1) // 2
    ks = Fraction(f_coefficient(r, s))
    a = 2 * r + 1 - 2 * s
    step = ReplacementStep(
        consumed=(((a, s), ks), ((a - 2, s + 1), 2 * ks)),
        produced=(((a - 2, s), ks), ((a - 2, s + 2), ks)),
        line_identity=IDENTITY_QUADRATIC,
    )
    result = _apply(f(d), step)
    return _finalize(result, d, (d + 3) // 2, f"q({d})"), step


def q(d: int) -> Polynomial:
    return q_with_trace(d)[0]


# -- h(m): degrees 3 mod 4 ----------------------------------------------------


def h_with_trace(m: int) -> tuple[Polynomial, ReplacementStep]:
    """f(4m-1) - (4m-1) x^(2m-1) y (f(2m-2) - 1), expanded and merged.

    The subtracted product vanishes on the line, so the result is again 1
    there; it has 2m+1 terms (two coefficients of f(4m-1) cancel exactly and
    two new monomials x^(2m-1) y and x^(2m-1) y^(2m-1) appear).
    """
    if m < 2:
        raise ValueError(f"m must be at least 2, got {m}")
    d = 4 * m - 1
    multiplier = Polynomial(2, {(2 * m - 1, 1): 4 * m - 1})
    delta = multiplier * (f(2 * m - 2) - Polynomial.constant(2, 1))
    consumed = tuple((e, c) for e, c in delta.canonical_terms() if c > 0)
    produced = tuple((e, -c) for e, c in delta.canonical_terms() if c < 0)
    step = ReplacementStep(consumed, produced,
                           line_identity=f"f({2 * m - 2}) = 1 on x+y=1")
    result = _apply(f(d), step)
    result = _finalize(result, d, 2 * m + 1, f"h({m})")
    for exp in ((4 * m - 3, 1), (4 * m - 5, 2)):
        if result.coefficient(exp) != 0:
            raise AssertionError(f"h({m}): coefficient at {exp} did not cancel")
    return result, step


def h(m: int) -> Polynomial:
    return h_with_trace(m)[0]


# -- scaled coefficients of h(m) ------------------------------------------------
#
# Write c_s for the coefficient of x^(4m-1-2s) y^s in h(m) and C_s for the
# integer 2^(4m-1) c_s.  Two independent evaluations:
#   * a closed form in factorials, and
#   * a pair of binomial double sums obtained by expanding both power-sum
#     parts of h(m) and extracting the y^s coefficient.
# C_1 = C_2 = 0 (the two exact cancellations) and C_s > 0 for 3 <= s <= m-1,
# which is what makes h(m) a map polynomial.


def h_coeff_closed(m: int, s: int) -> int:
    """Closed form for C_s = 2^(4m-1) c_s; valid for 1 <= s <= 2m-1."""
    if m < 2:
        raise ValueError("m must be at least 2")
    if not 1 <= s <= 2 * m - 1:
        raise ValueError(f"s must satisfy 1 <= s <= 2m-1, got {s}")
    first = Fraction(math.factorial(4 * m - s - 2),
                     math.factorial(4 * m - 2 * s - 1) * math.factorial(s))
    if 2 * m - 2 * s >= 0:
        second = 2 * (m - 1) * Fraction(
            math.factorial(2 * m - s - 2),
            math.factorial(2 * m - 2 * s) * math.factorial(s - 1))
    else:
        second = Fraction(0)  # reciprocal factorial of a negative integer
    value = (4 * m - 1) * Fraction(2) ** (4 * m - 1) * (first - second)
    if value.denominator != 1:
        raise AssertionError(f"C({m},{s}) is not an integer: {value}")
    return value.numerator


def h_coeff_sum(m: int, s: int) -> int:
    """Binomial double-sum evaluation of the same C_s; must agree with the closed form."""
    if m < 2:
        raise ValueError("m must be at least 2")
    if not 1 <= s <= 2 * m - 1:
        raise ValueError(f"s must satisfy 1 <= s <= 2m-1, got {s}")
    comb = math.comb
    first = sum(comb(4 * m - 1, 2 * j) * comb(j, s) for j in range(s, 2 * m)) * 4 ** s
    second = sum(comb(2 * m - 2, 2 * l) * comb(l, s - 1)
                 for l in range(s - 1, m)) * 4 ** (s - 1)
    return 2 * first - (4 * m - 1) * 2 ** (2 * m + 2) * second


@dataclass(frozen=True)
class HCoefficient:
    """The scaled coefficient C_s = 2^(4m-1) c_s of h(m), cross-validated."""

    m: int
    s: int
    value: int

    @classmethod
    def compute(cls, m: int, s: int) -> "HCoefficient":
        value = h_coeff_closed(m, s)
        if value != h_coeff_sum(m, s):
            raise AssertionError(f"closed form and double sum disagree at ({m},{s})")
        if s in (1, 2) and value != 0:
            raise AssertionError(f"C_{s} should vanish, got {value}")
        if 3 <= s <= m - 1 and value <= 0:
            raise AssertionError(f"C_{s} should be positive, got {value}")
        return cls(m, s, value)


def h_coeff_inequality_holds(m: int, s: int) -> bool:
    """Exact big-integer check that the positive part of C_s dominates.

    For 3 <= s <= m-1:  (4m-s-2)! / (4m-2s-1)!  >  2 (m-1) s (2m-s-2)! / (2m-2s)!.
    """
    if not (m >= 4 and 3 <= s <= m - 1):
        raise ValueError(f"inequality range is 3 <= s <= m-1 with m >= 4, got ({m},{s})")
    lhs = math.factorial(4 * m - s - 2) * math.factorial(2 * m - 2 * s)
    rhs = 2 * (m - 1) * s * math.factorial(2 * m - s - 2) * math.factorial(4 * m - 2 * s - 1)
    return lhs > rhs


# -- degrees 1 mod 6 ------------------------------------------------------------


def mod6_with_trace(k: int) -> tuple[Polynomial, ReplacementStep]:
    """Quartic-identity rewrite of f(6k+1) at the site r = 3k, s = 2k.

    There K(r,s)/K(r,s+1) = 2 and c = 4 K(r,s-1)/K(r,s) > 1, so the three
    consecutive terms equal
        (K(r,s)/4) x^(a-4) y^(s-1) ((c-1) x^4 + (x^4 + 4x^2y + 2y^2)),
    a = 2r+3-2s, and the parenthesized quartic block is replaced by 1 + y^4.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    d = 6 * k + 1
    r, s = 3 * k, 2 * k
    k_lo = Fraction(f_coefficient(r, s - 1))
    k_mid = Fraction(f_coefficient(r, s))
    k_hi = Fraction(f_coefficient(r, s + 1))
    if k_mid != 2 * k_hi:
        raise AssertionError(f"mod6({k}): middle/upper coefficient ratio is not 2")
    if k_lo / k_mid != Fraction(k * (4 * k + 1), (2 * k + 3) * (k + 1)):
        raise AssertionError(f"mod6({k}): lower/middle ratio does not match the closed form")
    c = 4 * k_lo / k_mid
    if c <= 1:
        raise AssertionError(f"mod6({k}): retained coefficient factor c-1 is not positive")
    quarter = k_mid / 4
    a = 2 * r + 3 - 2 * s
    step = ReplacementStep(
        consumed=(((a, s - 1), k_lo), ((a - 2, s), k_mid), ((a - 4, s + 1), k_hi)),
        produced=(((a, s - 1), quarter * (c - 1)),
                  ((a - 4, s - 1), quarter),
                  ((a - 4, s + 3), quarter)),
        line_identity=IDENTITY_QUARTIC,
    )
    result = _apply(f(d), step)
    return _finalize(result, d, 3 * k + 2, f"mod6({k})"), step


def mod6(k: int) -> Polynomial:
    return mod6_with_trace(k)[0]


# -- ratio-4 sites and their rewrite --------------------------------------------


def ratio4_sites(r_bound: int) -> list[tuple[int, int]]:
    """All (r, s) with r <= r_bound where K(r,s+1) = 4 K(r,s) and K(r,s+2) >= 2 K(r,s).

    The ratio-4 condition solves to s = (8r - 1 - sqrt(32r^2 + 32r + 1)) / 8,
    so sites require 32r^2 + 32r + 1 to be an odd square congruent to
    -1 mod 8 -- equivalently a^2 - 8 b^2 = -7 with b = 2r+1 and a = 8(r-s)-1.
    """
    if r_bound < 1:
        raise ValueError("r_bound must be positive")
    sites = []
    for r in range(1, r_bound + 1):
        disc = 32 * r * r + 32 * r + 1
        root = math.isqrt(disc)
        if root * root != disc:
            continue
        num = 8 * r - 1 - root
        if num % 8:
            continue
        s = num // 8
        if not 1 <= s <= r - 2:
            continue
        if coefficient_ratio(r, s) != 4:
            raise AssertionError(f"closed-form site ({r},{s}) does not have ratio 4")
        if f_coefficient(r, s + 2) >= 2 * f_coefficient(r, s):
            sites.append((r, s))
    return sites


def ratio4_construct_with_trace(r: int, s: int) -> tuple[Polynomial, ReplacementStep]:
    """Quartic-identity rewrite of f(2r+1) at a ratio-4 site.

    With a = 2r+1-2s and K = K(r,s), split K(r,s+2) = 2K + E (E > 0) and
    rewrite K x^(a-4) y^s (x^4 + 4x^2y + 2y^2) as K x^(a-4) y^s (1 + y^4),
    keeping E x^(a-4) y^(s+2).
    """
    if not 1 <= s <= r - 2:
        raise ValueError(f"invalid site ({r},{s}): need 1 <= s <= r-2")
    if coefficient_ratio(r, s) != 4:
        raise ValueError(f"invalid site ({r},{s}): consecutive coefficient ratio is not 4")
    ks = Fraction(f_coefficient(r, s))
    ks2 = Fraction(f_coefficient(r, s + 2))
    excess = ks2 - 2 * ks
    if excess < 0:
        raise ValueError(f"invalid site ({r},{s}): K(r,s+2) < 2 K(r,s)")
    if excess == 0:
        # would yield r+1 terms, contradicting the sharp bound (d+3)/2
        raise AssertionError(f"site ({r},{s}) has exact excess zero")
    d = 2 * r + 1
    a = 2 * r + 1 - 2 * s
    step = ReplacementStep(
        consumed=(((a, s), ks), ((a - 2, s + 1), 4 * ks), ((a - 4, s + 2), ks2)),
        produced=(((a - 4, s), ks), ((a - 4, s + 2), excess), ((a - 4, s + 4), ks)),
        line_identity=IDENTITY_QUARTIC,
    )
    result = _apply(f(d), step)
    return _finalize(result, d, r + 2, f"ratio4({r},{s})"), step


def ratio4_construct(r: int, s: int) -> Polynomial:
    return ratio4_construct_with_trace(r, s)[0]
