"""Geometric-progression-free subsets of F_q[x].

Exact constructions and membership tests for the greedy progression-free
set, certified-interval evaluation of its density and of the published
lower/upper bounds, and exhaustive combinatorial searches, all in exact
rational arithmetic.
"""

from .density import (
    CrossCheckResult,
    DensityReport,
    RnTable,
    ZetaIdentityCheck,
    checkpoint_density,
    cross_check_density_forms,
    empirical_greedy_density,
    figure1_data,
    greedy_density,
    greedy_density_interval,
    local_density,
    lower_bound_mq,
    mq_interval,
    rn_sequence,
    upper_bound_no,
    upper_bound_no_interval,
    upper_bound_simple,
    zeta_identity_check,
    zeta_q,
)
from .errors import (
    BudgetExceeded,
    CodeOutOfRange,
    CoefficientOutOfRange,
    Divergent,
    DivisionByZero,
    Error,
    NeedsMorePrecision,
    NegativeOperand,
    NotPrime,
    PolySyntaxError,
    ReducibleModulus,
    SpecMismatch,
    WrongDegreeModulus,
    ZeroPolynomial,
)
from .factor import (
    Factorization,
    count_irreducibles,
    enumerate_irreducibles,
    factorization_exponents,
    factorize,
    is_irreducible,
)
from .ff import FieldElem, FieldSpec, element_from_code, ff_add, ff_inv, ff_mul, make_field
from .numeric import Interval, Rat, exp_upper, render_decimal, round_half_away
from .polyring import (
    NEG_INFINITY,
    NormValue,
    Poly,
    canonical_key,
    constant,
    count_norm_exact,
    count_norm_le,
    derivative,
    enumerate_monic,
    enumerate_polys,
    enumerate_upto,
    format_poly,
    gcd,
    make_monic,
    monomial,
    norm,
    one,
    parse_poly,
    x,
    zero,
)
from .progfree import (
    DegreeSet,
    ProgressionWitness,
    a3_contains,
    a3_list,
    greedy_construct_bruteforce,
    greedy_member,
    has_progression,
    is_ap_free,
    max_progression_free_subset,
    nk,
    reflected_degrees,
    t3q_degrees,
)

__version__ = "0.1.0"
