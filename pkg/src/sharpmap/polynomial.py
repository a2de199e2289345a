"""Exact sparse multivariate polynomials over the rationals.

A polynomial in n variables is stored as a mapping from exponent tuples
(one nonnegative int per variable) to nonzero Fraction coefficients.  Zero
coefficients are never stored, so the number of stored terms equals the
number of distinct monomials.  All arithmetic is exact; the only floating
point in this module is the numeric sphere cross-check at the bottom.

The central predicates:

  * ``is_one_on_hyperplane(p)``  -- p(x) = 1 whenever x1 + ... + xn = 1
    (membership in the all-sign class of such polynomials);
  * ``is_map_polynomial(p)``     -- additionally every coefficient is
    positive.  Such a polynomial corresponds to a proper monomial map
    between unit spheres: z |-> (sqrt(c_a) z^a)_a satisfies
    ||f(z)||^2 = p(|z_1|^2, ..., |z_n|^2), so ||f(z)||^2 = 1 on the sphere.

Values are immutable after construction and safe to share across threads.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, NamedTuple, Sequence

Exponents = tuple[int, ...]

RationalLike = int | Fraction


class UnsupportedArityError(ValueError):
    """Raised when an operation defined only for two variables gets another arity."""


class MembershipError(ValueError):
    """Raised when a polynomial fails a required cone-membership precondition."""


def grlex_key(exp: Exponents) -> tuple[int, Exponents]:
    """Graded lexicographic sort key: total degree first, then the tuple itself."""
    return (sum(exp), exp)


def _coerce_coeff(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"coefficient must be an int or Fraction, got {type(value).__name__}")


class Polynomial:
    """Immutable sparse polynomial with exact rational coefficients.

    ``nvars`` may be 0, in which case the polynomial is a constant with the
    empty exponent tuple; this arises as the hyperplane restriction of a
    one-variable polynomial.
    """

    __slots__ = ("_nvars", "_terms")

    def __init__(self, nvars: int,
                 terms: Mapping[Exponents, RationalLike]
                 | Iterable[tuple[Exponents, RationalLike]] = ()):
        if nvars < 0:
            raise ValueError("nvars must be nonnegative")
        items = terms.items() if isinstance(terms, Mapping) else terms
        stored: dict[Exponents, Fraction] = {}
        for exp, coeff in items:
            exp = tuple(exp)
            if len(exp) != nvars:
                raise ValueError(f"exponent {exp} has length {len(exp)}, expected {nvars}")
            if any(e < 0 or not isinstance(e, int) for e in exp):
                raise ValueError(f"exponent {exp} must consist of nonnegative integers")
            c = _coerce_coeff(coeff) + stored.get(exp, Fraction(0))
            if c:
                stored[exp] = c
            else:
                stored.pop(exp, None)
        self._nvars = nvars
        self._terms = stored

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, value: RationalLike) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "Polynomial":
        """The monomial x_index (0-based) in nvars variables."""
        if not 0 <= index < nvars:
            raise ValueError(f"variable index {index} out of range for {nvars} variables")
        exp = [0] * nvars
        exp[index] = 1
        return cls(nvars, {tuple(exp): 1})

    @property
    def nvars(self) -> int:
        return self._nvars

    @property
    def terms(self) -> Mapping[Exponents, Fraction]:
        """Read-only view of the stored (exponent -> coefficient) mapping."""
        return MappingProxyType(self._terms)

    def coefficient(self, exp: Exponents) -> Fraction:
        return self._terms.get(tuple(exp), Fraction(0))

    def term_count(self) -> int:
        """Number of distinct monomials with nonzero coefficient."""
        return len(self._terms)

    def degree(self) -> int:
        """Maximal total degree of a stored term; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def canonical_terms(self) -> tuple[tuple[Exponents, Fraction], ...]:
        """Terms sorted in graded lexicographic order (the canonical order)."""
        return tuple(sorted(self._terms.items(), key=lambda t: grlex_key(t[0])))

    def is_zero(self) -> bool:
        return not self._terms

    # -- arithmetic ---------------------------------------------------------

    def _check_same_arity(self, other: "Polynomial") -> None:
        if self._nvars != other._nvars:
            raise ValueError(f"arity mismatch: {self._nvars} vs {other._nvars}")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_same_arity(other)
        out = dict(self._terms)
        for exp, c in other._terms.items():
            s = out.get(exp, Fraction(0)) + c
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
        return Polynomial._raw(self._nvars, out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_same_arity(other)
        out = dict(self._terms)
        for exp, c in other._terms.items():
            s = out.get(exp, Fraction(0)) - c
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
        return Polynomial._raw(self._nvars, out)

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(self._nvars, {e: -c for e, c in self._terms.items()})

    def __mul__(self, other: "Polynomial | RationalLike") -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            c = _coerce_coeff(other)
            if not c:
                return Polynomial.zero(self._nvars)
            return Polynomial._raw(self._nvars, {e: v * c for e, v in self._terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_same_arity(other)
        out: dict[Exponents, Fraction] = {}
        for ea, ca in self._terms.items():
            for eb, cb in other._terms.items():
                exp = tuple(x + y for x, y in zip(ea, eb))
                s = out.get(exp, Fraction(0)) + ca * cb
                if s:
                    out[exp] = s
                else:
                    out.pop(exp, None)
        return Polynomial._raw(self._nvars, out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise ValueError("negative powers are not supported")
        result = Polynomial.constant(self._nvars, 1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    @classmethod
    def _raw(cls, nvars: int, terms: dict[Exponents, Fraction]) -> "Polynomial":
        """Internal constructor skipping validation; terms must be canonical."""
        p = object.__new__(cls)
        p._nvars = nvars
        p._terms = terms
        return p

    # -- structure ----------------------------------------------------------

    def swap_xy(self) -> "Polynomial":
        """Exchange the two variables; defined only for nvars == 2."""
        if self._nvars != 2:
            raise UnsupportedArityError("variable swap is defined only for two variables")
        return Polynomial._raw(2, {(b, a): c for (a, b), c in self._terms.items()})

    def evaluate(self, point: Sequence[RationalLike]) -> Fraction:
        """Exact value of the polynomial at a rational point."""
        if len(point) != self._nvars:
            raise ValueError("point arity mismatch")
        vals = [_coerce_coeff(v) for v in point]
        total = Fraction(0)
        for exp, c in self._terms.items():
            term = c
            for e, v in zip(exp, vals):
                if e:
                    term *= v ** e
            total += term
        return total

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._nvars == other._nvars and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self._nvars, self.canonical_terms()))

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        names = ["x", "y", "z"] if self._nvars <= 3 else [f"x{i+1}" for i in range(self._nvars)]

        def mono(exp: Exponents) -> str:
            parts = []
            for name, e in zip(names, exp):
                if e == 1:
                    parts.append(name)
                elif e > 1:
                    parts.append(f"{name}^{e}")
            return "*".join(parts) if parts else "1"

        chunks = []
        for exp, c in self.canonical_terms():
            m = mono(exp)
            if c == 1 and m != "1":
                chunks.append(m)
            elif m == "1":
                chunks.append(str(c))
            else:
                chunks.append(f"{c}*{m}")
        return " + ".join(chunks)

    # -- JSON ---------------------------------------------------------------

    def to_json_dict(self) -> dict:
        """Canonical JSON form: terms in graded-lex order, coefficients as "num/den"."""
        return {
            "nvars": self._nvars,
            "terms": [
                {"exp": list(exp), "coeff": f"{c.numerator}/{c.denominator}"}
                for exp, c in self.canonical_terms()
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json_dict(cls, data: dict) -> "Polynomial":
        nvars = data["nvars"]
        terms = []
        for entry in data["terms"]:
            terms.append((tuple(entry["exp"]), Fraction(entry["coeff"])))
        return cls(nvars, terms)

    @classmethod
    def from_json(cls, text: str) -> "Polynomial":
        return cls.from_json_dict(json.loads(text))


def poly2(terms: Mapping[tuple[int, int], RationalLike]) -> Polynomial:
    """Convenience constructor for two-variable polynomials."""
    return Polynomial(2, terms)


class Signature(NamedTuple):
    """Counts of monomials with positive and negative coefficients."""

    n_plus: int
    n_minus: int


@dataclass(frozen=True)
class MonomialMap:
    """A proper monomial sphere map, stored as (exponent, squared coefficient) pairs.

    The component functions of the complex map are sqrt(c_a) z^a; only the
    squared coefficients c_a are stored, and they must be positive rationals
    attached to pairwise distinct exponents.
    """

    nvars: int
    components: tuple[tuple[Exponents, Fraction], ...]

    def __post_init__(self) -> None:
        if self.nvars < 1:
            raise ValueError("a monomial map needs at least one variable")
        seen = set()
        for exp, sq in self.components:
            if len(exp) != self.nvars:
                raise ValueError(f"component exponent {exp} has wrong arity")
            if sq <= 0:
                raise ValueError("squared coefficients must be strictly positive")
            if exp in seen:
                raise ValueError(f"duplicate component monomial {exp}")
            seen.add(exp)

    def term_count(self) -> int:
        return len(self.components)

    def to_json_dict(self) -> dict:
        return {
            "nvars": self.nvars,
            "components": [
                {"exp": list(exp), "sq_coeff": f"{c.numerator}/{c.denominator}"}
                for exp, c in self.components
            ],
        }


# -- hyperplane restriction ---------------------------------------------------


def _restrict_bivariate(terms: Mapping[Exponents, Fraction]) -> dict[Exponents, Fraction]:
    """Substitute y := 1 - x in a two-variable term map; returns 1-var terms."""
    out: dict[Exponents, Fraction] = {}
    comb = math.comb
    for (a, b), c in terms.items():
        # c * x^a * (1-x)^b expanded with alternating binomial coefficients
        for j in range(b + 1):
            k = (a + j,)
            delta = c * comb(b, j)
            s = out.get(k, Fraction(0)) + (-delta if j & 1 else delta)
            if s:
                out[k] = s
            else:
                out.pop(k, None)
    return out


def restrict_to_hyperplane(p: Polynomial) -> Polynomial:
    """Exact substitution of the last variable by 1 - (sum of the others).

    Returns the (n-1)-variable polynomial p(x_1, ..., x_{n-1}, 1 - sum x_j);
    for n = 1 the result is a constant (a 0-variable polynomial).
    """
    n = p.nvars
    if n < 1:
        raise ValueError("restriction needs at least one variable")
    if n == 1:
        total = sum(p.terms.values(), Fraction(0))
        return Polynomial(0, {(): total} if total else {})
    if n == 2:
        return Polynomial._raw(1, _restrict_bivariate(p.terms))

    # group terms by the exponent of the eliminated variable, then expand
    # (1 - s')^e once per exponent, in increasing order
    m = n - 1
    grouped: dict[int, dict[Exponents, Fraction]] = {}
    for exp, c in p.terms.items():
        head, e = exp[:m], exp[m]
        bucket = grouped.setdefault(e, {})
        bucket[head] = bucket.get(head, Fraction(0)) + c

    one_minus_s = Polynomial.constant(m, 1) - sum(
        (Polynomial.variable(m, j) for j in range(m)), Polynomial.zero(m)
    )
    power = Polynomial.constant(m, 1)
    result = Polynomial.zero(m)
    last_e = 0
    for e in sorted(grouped):
        for _ in range(e - last_e):
            power = power * one_minus_s
        last_e = e
        result = result + Polynomial(m, grouped[e]) * power
    return result


def is_one_on_hyperplane(p: Polynomial) -> bool:
    """True iff p restricts to the constant 1 on x_1 + ... + x_n = 1."""
    r = restrict_to_hyperplane(p)
    return r == Polynomial.constant(r.nvars, 1)


def is_map_polynomial(p: Polynomial) -> bool:
    """True iff p is 1 on the hyperplane and every coefficient is positive.

    These are exactly the polynomials induced by proper monomial maps
    between unit spheres via |z_j|^2 -> x_j.
    """
    return all(c > 0 for c in p.terms.values()) and is_one_on_hyperplane(p)


def signature(p: Polynomial) -> Signature:
    plus = sum(1 for c in p.terms.values() if c > 0)
    minus = sum(1 for c in p.terms.values() if c < 0)
    return Signature(plus, minus)


def equivalent(p: Polynomial, q: Polynomial) -> bool:
    """Equality up to exchanging the two variables; only arity 2 is supported."""
    if p.nvars != 2 or q.nvars != 2:
        raise UnsupportedArityError("equivalence is defined only for two-variable polynomials")
    return p == q or p == q.swap_xy()


def to_monomial_map(p: Polynomial) -> MonomialMap:
    """Convert a map polynomial to its proper monomial sphere map."""
    if not is_map_polynomial(p):
        raise MembershipError("polynomial is not in the nonnegative hyperplane-one cone")
    return MonomialMap(p.nvars, p.canonical_terms())


def assert_term_bound(p: Polynomial) -> None:
    """Sharp two-variable degree bound: d <= 2N - 3, i.e. N >= (d+3)/2.

    Checked as a global postcondition on every generated two-variable map
    polynomial of positive degree; the caller is responsible for having
    verified cone membership already.
    """
    if p.nvars == 2 and p.degree() >= 1:
        n, d = p.term_count(), p.degree()
        if 2 * n - 3 < d:
            raise AssertionError(f"term bound violated: degree {d} with {n} terms")


# -- floating-point sphere cross-check ----------------------------------------
#
# Exact identities are the source of truth everywhere else; this check only
# guards against structural blunders by sampling the unit sphere of C^n.
# Coefficients can be astronomically large (hundreds of digits), so term
# values are computed with explicit mantissa/exponent bookkeeping instead of
# raw float conversion, keeping relative error near machine epsilon per term.


def _frexp_fraction(value: Fraction) -> tuple[float, int]:
    """Return (m, e) with value = m * 2**e and 0.5 <= m < 1, to float precision."""
    num, den = value.numerator, value.denominator
    shift = 64 - (num.bit_length() - den.bit_length())
    if shift >= 0:
        q = (num << shift) // den
    else:
        q = num // (den << -shift)
    m, e = math.frexp(q)
    return m, e - shift

def _pow_scaled(mant: float, exp2: int, power: int) -> tuple[float, int]:
    """(mant * 2**exp2) ** power by square-and-multiply with renormalization."""
    rm, re = 1.0, 0
    bm, be = mant, exp2
    e = power
    while e:
        if e & 1:
            rm *= bm
            re += be
            rm, d = math.frexp(rm)
            re += d
        e >>= 1
        if e:
            bm *= bm
            be *= 2
            bm, d = math.frexp(bm)
            be += d
    return rm, re


def check_sphere_numeric(m: MonomialMap, samples: int, seed: int) -> float:
    """Maximum |  ||f(z)||^2 - 1 | over pseudo-random points on the unit sphere.

    Points are drawn deterministically from ``seed``.  Since only the moduli
    |z_j|^2 enter, each sample reduces to a point (x_1, ..., x_n) on the
    standard simplex obtained by normalizing squared Gaussians.
    """
    if samples < 1:
        raise ValueError("samples must be at least 1")
    rng = random.Random(seed)
    n = m.nvars

    # split components into float-safe terms and scaled big-coefficient terms
    plain: list[tuple[Exponents, float]] = []
    scaled: list[tuple[Exponents, float, int]] = []
    for exp, sq in m.components:
        if sq.numerator.bit_length() < 512 and sq.denominator.bit_length() < 512:
            plain.append((exp, sq.numerator / sq.denominator))
        else:
            mant, e2 = _frexp_fraction(sq)
            scaled.append((exp, mant, e2))

    worst = 0.0
    for _ in range(samples):
        while True:
            sq_moduli = [rng.gauss(0.0, 1.0) ** 2 + rng.gauss(0.0, 1.0) ** 2
                         for _ in range(n)]
            norm = sum(sq_moduli)
            if norm > 0.0:
                break
        xs = [v / norm for v in sq_moduli]
        parts = []
        for exp, c in plain:
            t = c
            for e, x in zip(exp, xs):
                if e:
                    t *= x ** e
            parts.append(t)
        for exp, mant, e2 in scaled:
            tm, te = mant, e2
            zero = False
            for e, x in zip(exp, xs):
                if not e:
                    continue
                if x == 0.0:
                    zero = True
                    break
                xm, xe = math.frexp(x)
                pm, pe = _pow_scaled(xm, xe, e)
                tm *= pm
                te += pe
                tm, d = math.frexp(tm)
                te += d
            if not zero:
                try:
                    parts.append(math.ldexp(tm, te))
                except OverflowError:
                    parts.append(math.inf)
        residual = abs(math.fsum(parts) - 1.0)
        if residual > worst:
            worst = residual
    return worst
