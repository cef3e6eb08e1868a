"""Exact Fibonacci/Lucas arithmetic, quaternion algebras over Q, split
certificates with a Hilbert-symbol oracle, and group-valued recurrences."""

from .errors import DomainError, FibquatError, UndecidedError
from .factoring import DEFAULT_BUDGET, Budget, factorize
from .genseq import (
    DTypeSpec,
    LinearRelation,
    RatioLimit,
    Side,
    binet_general,
    d_minus_one,
    d_seq,
    dtype_closed_form,
    dtype_seq,
    ratio_limit,
    relation_seq,
)
from .groups import (
    GroupOracle,
    IntegersAdditive,
    RationalsMultiplicative,
    UnitsMod,
    group_from_name,
)
from .identities import (
    CheckResult,
    IdentityId,
    MTerm,
    Report,
    check_identity,
    domain_min,
    f5_factor,
    in_ideal_M,
    in_ring_A,
    m_element,
    printed_m_term,
    verify_range,
)
from .quadext import QuadExt
from .quatalg import (
    HAMILTON,
    AlgebraParams,
    NormRelationId,
    Quaternion,
    fib_quaternion,
    lucas_quaternion,
    norm_relation_check,
    quat_add,
    quat_conj,
    quat_mul,
    quat_norm,
    quat_sub,
    quat_trace,
)
from .seqcore import INDEX_BOUND, fib, fib_pair, gen_fib_lucas, lucas
from .splitcert import (
    ConicSpec,
    Decision,
    RationalPoint,
    certificate_family,
    decide_split_hilbert,
    hilbert_symbol,
    search_point,
    verify_point,
)

__version__ = "1.0.0"

# Operation-level callables; the CLI coverage test asserts each is reachable
# from at least one subcommand.
PUBLIC_OPS = (
    fib,
    lucas,
    gen_fib_lucas,
    fib_pair,
    check_identity,
    verify_range,
    domain_min,
    f5_factor,
    in_ring_A,
    in_ideal_M,
    m_element,
    printed_m_term,
    quat_mul,
    quat_add,
    quat_sub,
    quat_conj,
    quat_trace,
    quat_norm,
    fib_quaternion,
    lucas_quaternion,
    norm_relation_check,
    factorize,
    certificate_family,
    verify_point,
    search_point,
    hilbert_symbol,
    decide_split_hilbert,
    relation_seq,
    binet_general,
    ratio_limit,
    d_seq,
    dtype_seq,
    dtype_closed_form,
    group_from_name,
)

__all__ = [
    "AlgebraParams",
    "Budget",
    "CheckResult",
    "ConicSpec",
    "DEFAULT_BUDGET",
    "DTypeSpec",
    "Decision",
    "DomainError",
    "FibquatError",
    "GroupOracle",
    "HAMILTON",
    "INDEX_BOUND",
    "IdentityId",
    "IntegersAdditive",
    "LinearRelation",
    "MTerm",
    "NormRelationId",
    "PUBLIC_OPS",
    "QuadExt",
    "Quaternion",
    "RationalPoint",
    "RationalsMultiplicative",
    "RatioLimit",
    "Report",
    "Side",
    "UndecidedError",
    "UnitsMod",
    "binet_general",
    "certificate_family",
    "check_identity",
    "d_minus_one",
    "d_seq",
    "decide_split_hilbert",
    "domain_min",
    "dtype_closed_form",
    "dtype_seq",
    "f5_factor",
    "factorize",
    "fib",
    "fib_pair",
    "fib_quaternion",
    "gen_fib_lucas",
    "group_from_name",
    "hilbert_symbol",
    "in_ideal_M",
    "in_ring_A",
    "lucas",
    "lucas_quaternion",
    "m_element",
    "norm_relation_check",
    "printed_m_term",
    "quat_add",
    "quat_conj",
    "quat_mul",
    "quat_norm",
    "quat_sub",
    "quat_trace",
    "ratio_limit",
    "relation_seq",
    "search_point",
    "verify_point",
    "verify_range",
]
