"""Sharp polynomial families in two variables.

``f(d)`` is the integer-coefficient family built from the power sums of the
roots of t^2 - x t - y: with g_0 = 2, g_1 = x and g_d = x g_{d-1} + y g_{d-2},

    f_d = g_d + (-1)^(d+1) y^d.

For every d, f_d equals 1 on the line x + y = 1 and has degree d; for odd
d = 2r + 1 all coefficients are positive and there are (d+3)/2 distinct
monomials, which attains the minimal possible term count for that degree.
The coefficient of x^(2r+1-2s) y^s is the integer

    K(r, s) = (2r+1)/s * C(2r-s, s-1).

``even_u`` and ``even_family`` give minimal-term examples in even degree by
splicing one odd-degree family member into another.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .polynomial import Polynomial, assert_term_bound, equivalent, is_map_polynomial


@lru_cache(maxsize=128)
def _power_sum_terms(d: int) -> tuple[tuple[tuple[int, int], int], ...]:
    """Terms of g_d as ((a, b), int coefficient) pairs; pure int arithmetic."""
    g_prev: dict[tuple[int, int], int] = {(0, 0): 2}   # g_0
    g: dict[tuple[int, int], int] = {(1, 0): 1}        # g_1
    if d == 0:
        return tuple(g_prev.items())
    for _ in range(d - 1):
        nxt: dict[tuple[int, int], int] = {}
        for (a, b), c in g.items():
            nxt[(a + 1, b)] = nxt.get((a + 1, b), 0) + c
        for (a, b), c in g_prev.items():
            key = (a, b + 1)
            v = nxt.get(key, 0) + c
            if v:
                nxt[key] = v
            else:
                nxt.pop(key, None)
        g_prev, g = g, nxt
    return tuple(g.items())


def f(d: int) -> Polynomial:
    """The degree-d family member; integer coefficients, exact.

    Positive coefficients (hence a sphere-map polynomial) exactly when d is
    odd; for even d the trailing term is -y^d.
    """
    if d < 1:
        raise ValueError(f"degree must be positive, got {d}")
    terms: dict[tuple[int, int], Fraction] = {
        exp: Fraction(c) for exp, c in _power_sum_terms(d)
    }
    tail = (0, d)
    sign = 1 if d % 2 else -1
    v = terms.get(tail, Fraction(0)) + sign
    if v:
        terms[tail] = v
    else:
        terms.pop(tail, None)
    return Polynomial(2, terms)


def f_coefficient(r: int, s: int) -> int:
    """Closed form K(r, s) = (2r+1)/s * C(2r-s, s-1) for the odd family f(2r+1).

    Always an integer in the valid range; checked.
    """
    if not 1 <= s <= r:
        raise ValueError(f"s must satisfy 1 <= s <= r, got r={r}, s={s}")
    value = Fraction(2 * r + 1, s) * math.comb(2 * r - s, s - 1)
    if value.denominator != 1:
        raise AssertionError(f"K({r},{s}) is not an integer: {value}")
    return value.numerator


def coefficient_ratio(r: int, s: int) -> Fraction:
    """K(r, s+1) / K(r, s); equals (2r-2s+1)(2r-2s) / ((s+1)(2r-s)), asserted."""
    if not 1 <= s <= r - 1:
        raise ValueError(f"s must satisfy 1 <= s <= r-1, got r={r}, s={s}")
    ratio = Fraction(f_coefficient(r, s + 1), f_coefficient(r, s))
    closed = Fraction((2 * r - 2 * s + 1) * (2 * r - 2 * s), (s + 1) * (2 * r - s))
    if ratio != closed:
        raise AssertionError(f"coefficient ratio mismatch at ({r},{s}): {ratio} vs {closed}")
    return ratio


def even_u(j: int, l: int, pick_x: bool = True) -> Polynomial:
    """Even-degree minimal-term example (f_{2j+1} - m) + m * f_{2l+1}.

    ``m`` is the removed top monomial x^(2j+1) (or y^(2j+1) when pick_x is
    false).  The result has degree 2(j+l+1) and exactly j+l+3 terms.
    """
    if j < 0 or l < 0:
        raise ValueError("j and l must be nonnegative")
    base = f(2 * j + 1)
    exp = (2 * j + 1, 0) if pick_x else (0, 2 * j + 1)
    m = Polynomial(2, {exp: base.coefficient(exp)})
    u = (base - m) + m * f(2 * l + 1)
    expected_terms = j + l + 3
    if not (u.degree() == 2 * (j + l + 1) and u.term_count() == expected_terms
            and is_map_polynomial(u)):
        raise AssertionError(f"even-degree construction failed at j={j}, l={l}")
    assert_term_bound(u)
    return u


def even_family(k: int) -> list[Polynomial]:
    """k pairwise-inequivalent minimal-term members of degree 2k.

    Varies j = 0..k-1 with l = k-1-j in ``even_u``; each output has k+2
    terms.  Inequivalence holds because the minimal total degree of a
    monomial in the j-th member is j+1, which the variable swap preserves.
    """
    if k < 1:
        raise ValueError("k must be positive")
    out = [even_u(j, k - 1 - j, pick_x=True) for j in range(k)]
    for i in range(len(out)):
        for jj in range(i + 1, len(out)):
            if equivalent(out[i], out[jj]):
                raise AssertionError(f"even family members {i} and {jj} are equivalent")
    return out


@dataclass(frozen=True)
class SharpFamilyElement:
    """A family member together with the construction that produced it."""

    degree: int
    poly: Polynomial
    provenance: str

    def __post_init__(self) -> None:
        if self.poly.degree() != self.degree:
            raise ValueError(f"polynomial degree {self.poly.degree()} != {self.degree}")
        if self.provenance.startswith("f") and self.degree % 2:
            if not is_map_polynomial(self.poly):
                raise ValueError("odd-degree family member must be a map polynomial")
            if self.poly.term_count() != (self.degree + 3) // 2:
                raise ValueError("odd-degree family member has the wrong term count")
        if self.provenance.startswith("even_u"):
            if self.poly.term_count() != self.degree // 2 + 2:
                raise ValueError("even-degree member has the wrong term count")


def f_element(d: int) -> SharpFamilyElement:
    return SharpFamilyElement(d, f(d), f"f({d})")


def even_element(j: int, l: int, pick_x: bool = True) -> SharpFamilyElement:
    tag = f"even_u({j},{l},{'x' if pick_x else 'y'})"
    return SharpFamilyElement(2 * (j + l + 1), even_u(j, l, pick_x), tag)
