"""Exact constructions and searches for proper monomial sphere map polynomials.

The objects of study are polynomials with nonnegative coefficients that take
the constant value 1 on the hyperplane x_1 + ... + x_n = 1; they correspond
one-to-one with proper monomial maps between unit spheres.  Everything is
exact rational arithmetic; floating point appears only in an optional
numeric cross-check of the sphere identity.
"""

from .constructions import (
    HCoefficient,
    ReplacementStep,
    h,
    h_coeff_closed,
    h_coeff_inequality_holds,
    h_coeff_sum,
    h_with_trace,
    mod6,
    mod6_with_trace,
    pell_ratio_site,
    q,
    q_with_trace,
    ratio4_construct,
    ratio4_construct_with_trace,
    ratio4_sites,
)
from .families import (
    SharpFamilyElement,
    coefficient_ratio,
    even_element,
    even_family,
    even_u,
    f,
    f_coefficient,
    f_element,
)
from .gaps import (
    GapWitness,
    SignatureWitness,
    T,
    V,
    W,
    append_negative,
    decompose_target,
    frobenius,
    gap_witness,
    monomials_independent_of_constants,
    signature_impossible,
    signature_witness,
)
from .pell import (
    GeneralizedPellSolution,
    PellSolution,
    congruence_class,
    fundamental_solution,
    generalized_solutions,
    solution_at,
    solutions,
)
from .polynomial import (
    MembershipError,
    MonomialMap,
    Polynomial,
    Signature,
    UnsupportedArityError,
    check_sphere_numeric,
    equivalent,
    is_map_polynomial,
    is_one_on_hyperplane,
    poly2,
    restrict_to_hyperplane,
    signature,
    to_monomial_map,
)
from .search import (
    BudgetExceededError,
    FeasibilityResult,
    SharpCertificate,
    SharpWitness,
    Support,
    UniquenessResult,
    enumerate_naive,
    enumerate_sharp,
    feasible,
    minimal_terms,
    uniqueness_status,
)

__version__ = "0.1.0"
