"""Exhaustive, certificate-producing search for minimal-term map polynomials.

For a candidate support S = {(a_i, b_i)} of two-variable monomials, a map
polynomial with that support exists iff the linear system

    sum_i c_i x^(a_i) (1-x)^(b_i)  ==  1     (as a polynomial in x)

has a strictly positive rational solution.  The system is solved exactly:
integer Gaussian elimination decides consistency and rank, and when the
solution set has positive dimension an exact rational simplex (Bland's
rule, two phases) maximizes the minimum coefficient t; a strictly positive
solution exists iff the optimum satisfies t > 0.  No floating point enters
the decision anywhere.

Support enumeration applies four pruning rules, each with a one-line proof:

  (i)   top slice nonempty: a degree-d polynomial contains a monomial of
        total degree d by definition.
  (ii)  pure-power terms: p(1, 0) = 1 and p(0, 1) = 1 because both points
        lie on the line, and every monomial with a positive y- (resp. x-)
        exponent vanishes there; so some term has y-exponent 0 and some
        term has x-exponent 0 (a constant term qualifies for both).
  (iii) swap canonicalization: the x<->y exchange preserves membership,
        degree and term count, so only the lexicographically minimal
        support of each orbit is solved and the mirror is reconstructed.
  (iv)  top-slice sign balance: the x^d coefficient of
        sum c_i x^(a_i)(1-x)^(b_i) - 1 is sum over a_i+b_i=d of
        (-1)^(b_i) c_i and must vanish; with all c_i > 0 the top slice
        must contain monomials with both parities of b.  (Subsumes (i).)

A naive enumerator with no pruning and no symmetry reduction is provided as
the completeness oracle for small degrees.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .linprog import max_min_component
from .polynomial import Polynomial, assert_term_bound, is_map_polynomial

Monomial = tuple[int, int]


class BudgetExceededError(RuntimeError):
    """Raised when a search cannot finish within its time budget."""


@dataclass(frozen=True)
class Support:
    """A candidate monomial support for a degree-d map polynomial."""

    degree: int
    monomials: tuple[Monomial, ...]

    def __post_init__(self) -> None:
        mons = tuple(sorted(set(self.monomials), key=lambda m: (m[0] + m[1], m)))
        object.__setattr__(self, "monomials", mons)
        if not mons:
            raise ValueError("support must be nonempty")
        if any(a < 0 or b < 0 for a, b in mons):
            raise ValueError("exponents must be nonnegative")
        if max(a + b for a, b in mons) != self.degree:
            raise ValueError("maximal total degree must equal the stated degree")
        if not any(b == 0 for _, b in mons):
            raise ValueError("support lacks a term with y-exponent 0 (forced by p(1,0)=1)")
        if not any(a == 0 for a, _ in mons):
            raise ValueError("support lacks a term with x-exponent 0 (forced by p(0,1)=1)")


@dataclass(frozen=True)
class FeasibilityResult:
    """Outcome of the exact positivity decision for one support."""

    status: str  # "infeasible" | "point" | "polytope"
    coefficients: tuple[Fraction, ...] | None
    freedom: int

    @property
    def feasible(self) -> bool:
        return self.status != "infeasible"


_INFEASIBLE = FeasibilityResult("infeasible", None, 0)


def _column(mon: Monomial, degree: int) -> tuple[int, ...]:
    """Coefficients of x^a (1-x)^b in the basis 1, x, ..., x^degree."""
    a, b = mon
    col = [0] * (degree + 1)
    for j in range(b + 1):
        col[a + j] = -math.comb(b, j) if j & 1 else math.comb(b, j)
    return tuple(col)


def _eliminate(columns: list[tuple[int, ...]], degree: int):
    """Integer row reduction of [A | e_0]; returns (rank, pivots, rows) or None.

    None means the equality system is inconsistent.  Row updates use exact
    cross-multiplication, so all entries stay integers.
    """
    n = len(columns)
    rows = [[columns[i][t] for i in range(n)] + [1 if t == 0 else 0]
            for t in range(degree + 1)]
    m = degree + 1
    pivots: list[tuple[int, int]] = []
    r = 0
    for c in range(n):
        pivot_row = None
        for i in range(r, m):
            if rows[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        pr = rows[r]
        pv = pr[c]
        for i in range(r + 1, m):
            v = rows[i][c]
            if v:
                ri = rows[i]
                for k in range(c, n + 1):
                    ri[k] = ri[k] * pv - pr[k] * v
        pivots.append((r, c))
        r += 1
    for i in range(r, m):
        if rows[i][n]:
            return None
    return r, pivots, rows


def _back_substitute(n: int, pivots, rows) -> list[Fraction]:
    coeffs: list[Fraction] = [Fraction(0)] * n
    for row_idx, col in reversed(pivots):
        row = rows[row_idx]
        s = Fraction(row[n])
        for k in range(col + 1, n):
            if row[k]:
                s -= row[k] * coeffs[k]
        coeffs[col] = s / row[col]
    return coeffs


def _positive_point_lp(columns: list[tuple[int, ...]], degree: int,
                       rank: int) -> FeasibilityResult:
    """Decide strict positivity on an underdetermined consistent system.

    Maximizes the minimum coefficient t subject to the equalities; a
    strictly positive solution exists iff the optimum has t > 0.
    """
    n = len(columns)
    rhs = [1 if t == 0 else 0 for t in range(degree + 1)]
    t_star, u = max_min_component(columns, rhs)
    if t_star is None or t_star <= 0:
        return _INFEASIBLE
    return FeasibilityResult("polytope", u, n - rank)


def solve_support_system(monomials, degree: int) -> FeasibilityResult:
    """Exact positivity decision for an arbitrary monomial set (no pruning)."""
    mons = tuple(monomials)
    columns = [_column(m, degree) for m in mons]
    outcome = _eliminate(columns, degree)
    if outcome is None:
        return _INFEASIBLE
    rank, pivots, rows = outcome
    n = len(mons)
    if rank == n:
        coeffs = _back_substitute(n, pivots, rows)
        if all(c > 0 for c in coeffs):
            return FeasibilityResult("point", tuple(coeffs), 0)
        return _INFEASIBLE
    return _positive_point_lp(columns, degree, rank)


def feasible(support: Support) -> FeasibilityResult:
    """Positivity decision for a validated support."""
    return solve_support_system(support.monomials, support.degree)


# -- enumeration ------------------------------------------------------------------


@dataclass(frozen=True)
class SharpWitness:
    """One feasible support with its realized polynomial."""

    support: Support
    polynomial: Polynomial
    freedom: int


@dataclass
class SearchStats:
    examined: int = 0
    pruned: int = 0
    elapsed_seconds: float = 0.0

    def to_json_dict(self) -> dict:
        return {
            "supports_examined": self.examined,
            "supports_pruned": self.pruned,
            "elapsed_seconds": round(self.elapsed_seconds, 3),
        }


@dataclass(frozen=True)
class SharpCertificate:
    """Result of an exhaustive minimal-term search at one degree."""

    degree: int
    min_terms: int
    representatives: tuple[Polynomial, ...]
    exhaustive: bool
    stats: SearchStats

    def to_json_dict(self) -> dict:
        return {
            "degree": self.degree,
            "min_terms": self.min_terms,
            "representatives": [p.to_json_dict() for p in self.representatives],
            "exhaustive": self.exhaustive,
            "search_stats": self.stats.to_json_dict(),
        }


def monomial_universe(degree: int) -> list[Monomial]:
    """All candidate monomials of total degree <= degree, in graded-lex order."""
    mons = [(a, t - a) for t in range(degree + 1) for a in range(t + 1)]
    mons.sort(key=lambda m: (m[0] + m[1], m))
    return mons


def _witness_from_result(mons: tuple[Monomial, ...], degree: int,
                         res: FeasibilityResult) -> SharpWitness:
    poly = Polynomial(2, dict(zip(mons, res.coefficients)))
    if not is_map_polynomial(poly) or poly.degree() != degree:
        raise AssertionError(f"solver returned an invalid witness on {mons}")
    assert_term_bound(poly)
    return SharpWitness(Support(degree, mons), poly, res.freedom)


def _search_block(degree: int, terms: int, first_indices, deadline):
    """Enumerate supports whose smallest universe index lies in first_indices."""
    universe = monomial_universe(degree)
    n_universe = len(universe)
    index_of = {m: i for i, m in enumerate(universe)}
    top_even = top_odd = pure_x = pure_y = 0
    for i, (a, b) in enumerate(universe):
        if a + b == degree:
            if b % 2 == 0:
                top_even |= 1 << i
            else:
                top_odd |= 1 << i
        if b == 0:
            pure_x |= 1 << i
        if a == 0:
            pure_y |= 1 << i
    swap_index = [index_of[(b, a)] for (a, b) in universe]
    bit = [1 << i for i in range(n_universe)]

    witnesses: list[SharpWitness] = []
    examined = pruned = 0
    ticker = 0
    for first in first_indices:
        mask0 = bit[first]
        for rest in combinations(range(first + 1, n_universe), terms - 1):
            ticker += 1
            if deadline is not None and not (ticker & 0xFFF) and time.monotonic() > deadline:
                return witnesses, examined, pruned, False
            mask = mask0
            for i in rest:
                mask |= bit[i]
            if not (mask & top_even and mask & top_odd
                    and mask & pure_x and mask & pure_y):
                pruned += 1
                continue
            combo = (first,) + rest
            mirrored = sorted(swap_index[i] for i in combo)
            if mirrored < list(combo):
                pruned += 1
                continue
            examined += 1
            mons = tuple(universe[i] for i in combo)
            res = solve_support_system(mons, degree)
            if res.feasible:
                witnesses.append(_witness_from_result(mons, degree, res))
    return witnesses, examined, pruned, True


def _shard_worker(args):
    degree, terms, first_indices, deadline = args
    return _search_block(degree, terms, first_indices, deadline)


def _balanced_partition(n_universe: int, terms: int, shards: int) -> list[list[int]]:
    """Split first indices into shards with roughly equal combination counts."""
    weights = [(math.comb(n_universe - 1 - i, terms - 1), i)
               for i in range(n_universe)]
    buckets: list[list[int]] = [[] for _ in range(shards)]
    loads = [0] * shards
    for w, i in sorted(weights, reverse=True):
        k = loads.index(min(loads))
        buckets[k].append(i)
        loads[k] += w
    for bucket in buckets:
        bucket.sort()
    return [b for b in buckets if b]


def enumerate_sharp(degree: int, terms: int, budget_seconds: float | None = None,
                    shards: int = 1) -> tuple[list[SharpWitness], bool, SearchStats]:
    """All feasible size-``terms`` supports at the given degree, up to swap.

    Returns one witness per canonical support, a flag saying whether the
    enumeration ran to completion, and counters.  With ``shards`` > 1 the
    first-index ranges are processed in parallel and merged in canonical
    order, so the output does not depend on the number of shards.
    """
    if terms < 2:
        raise ValueError("a map polynomial of positive degree needs at least 2 terms")
    if degree < 1:
        raise ValueError("degree must be positive")
    start = time.monotonic()
    deadline = start + budget_seconds if budget_seconds is not None else None
    universe = monomial_universe(degree)
    stats = SearchStats()
    witnesses: list[SharpWitness] = []
    exhaustive = True
    if terms <= len(universe):
        all_first = list(range(len(universe)))
        if shards <= 1:
            witnesses, stats.examined, stats.pruned, exhaustive = _search_block(
                degree, terms, all_first, deadline)
        else:
            import multiprocessing

            parts = _balanced_partition(len(universe), terms, shards)
            with multiprocessing.get_context("fork").Pool(len(parts)) as pool:
                results = pool.map(_shard_worker,
                                   [(degree, terms, p, deadline) for p in parts])
            for wits, examined, pruned, complete in results:
                witnesses.extend(wits)
                stats.examined += examined
                stats.pruned += pruned
                exhaustive = exhaustive and complete
    witnesses.sort(key=lambda w: w.support.monomials)
    stats.elapsed_seconds = time.monotonic() - start
    return witnesses, exhaustive, stats


def enumerate_naive(degree: int, terms: int) -> list[SharpWitness]:
    """Completeness oracle: every size-``terms`` subset, no pruning, no symmetry.

    Feasible supports whose realized polynomial has the requested degree are
    returned (both orientations of asymmetric supports appear).  Intended
    for small degrees only.
    """
    universe = monomial_universe(degree)
    out = []
    for combo in combinations(universe, terms):
        res = solve_support_system(combo, degree)
        if res.feasible:
            poly = Polynomial(2, dict(zip(combo, res.coefficients)))
            if poly.degree() == degree:
                out.append(SharpWitness(Support(degree, combo), poly, res.freedom))
    return out


@dataclass(frozen=True)
class MinimalTermsResult:
    degree: int
    min_terms: int
    certificate: SharpCertificate
    witnesses: tuple[SharpWitness, ...]


def minimal_terms(degree: int, budget_seconds: float | None = None,
                  shards: int = 1) -> MinimalTermsResult:
    """Smallest achievable term count at the given degree, with witnesses.

    Starts at the proven lower bound ceil((d+3)/2) and increases until a
    feasible support exists; (x+y)^d guarantees termination by d+1.
    """
    if degree < 1:
        raise ValueError("degree must be positive")
    deadline = (time.monotonic() + budget_seconds
                if budget_seconds is not None else None)
    n = (degree + 4) // 2  # == ceil((degree + 3) / 2)
    while n <= degree + 1:
        remaining = None if deadline is None else deadline - time.monotonic()
        if remaining is not None and remaining <= 0:
            raise BudgetExceededError(f"budget exhausted before finishing N={n}")
        witnesses, exhaustive, stats = enumerate_sharp(degree, n, remaining, shards)
        if not exhaustive:
            raise BudgetExceededError(f"budget exhausted during N={n}")
        if witnesses:
            cert = SharpCertificate(degree, n,
                                    tuple(w.polynomial for w in witnesses),
                                    True, stats)
            return MinimalTermsResult(degree, n, cert, tuple(witnesses))
        n += 1
    raise AssertionError(f"no feasible support found up to N={degree + 1}")


UNIQUE = "unique"
UNIQUE_UP_TO_EQUIVALENCE = "unique_up_to_equivalence"
FAILS = "fails"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class UniquenessResult:
    """Uniqueness trichotomy for the minimal-term polynomials of one degree."""

    degree: int
    status: str
    min_terms: int | None
    class_count: int
    distinct_polynomials: tuple[Polynomial, ...]
    certificate: SharpCertificate | None

    def to_json_dict(self) -> dict:
        return {
            "degree": self.degree,
            "status": self.status,
            "min_terms": self.min_terms,
            "class_count": self.class_count,
            "distinct_polynomials": [p.to_json_dict() for p in self.distinct_polynomials],
            "certificate": None if self.certificate is None else self.certificate.to_json_dict(),
        }


def uniqueness_status(degree: int, budget_seconds: float | None = None,
                      shards: int = 1) -> UniquenessResult:
    """Decide whether all minimal-term polynomials of a degree coincide.

    ``unique``: exactly one minimal polynomial; ``unique_up_to_equivalence``:
    exactly two, exchanged by the variable swap; ``fails``: at least two
    swap-inequivalent ones, or a positive-dimensional family; ``unknown``:
    the budget ran out before the search was exhaustive.
    """
    try:
        result = minimal_terms(degree, budget_seconds, shards)
    except BudgetExceededError:
        return UniquenessResult(degree, UNKNOWN, None, 0, (), None)
    polys: list[Polynomial] = []
    for witness in result.witnesses:
        polys.append(witness.polynomial)
        mirrored = witness.polynomial.swap_xy()
        if mirrored != witness.polynomial:
            polys.append(mirrored)
    classes = len(result.witnesses)
    has_continuum = any(w.freedom > 0 for w in result.witnesses)
    if has_continuum or classes >= 2:
        status = FAILS
    elif len(polys) == 1:
        status = UNIQUE
    else:
        status = UNIQUE_UP_TO_EQUIVALENCE
    return UniquenessResult(degree, status, result.min_terms, classes,
                            tuple(polys), result.certificate)
