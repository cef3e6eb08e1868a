"""Generalized second-order sequences, exact closed forms, and group variants.

Three layers live here.  `relation_seq` iterates x*y = A*x + B*y style
recurrences exactly over the rationals.  `binet_general` evaluates the same
sequence through its closed form inside the quadratic extension Q(sqrt(Delta)),
and `ratio_limit` returns the dominant root with an empirical consecutive-ratio
check.  The d-type layer lifts the recurrence into an arbitrary abelian group
through integer exponent sequences d_n.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, NamedTuple, Union

from .errors import DomainError
from .groups import GroupOracle
from .quadext import QuadExt

RELATION_INDEX_BOUND = 10**5
BINET_INDEX_BOUND = 10**4
DTYPE_INDEX_BOUND = 10**3
D_INDEX_BOUND = 10**6
_RATIO_CHECK_INDEX = 200

Rational = Union[int, Fraction]


class Side(str, Enum):
    LEFT = "Left"
    RIGHT = "Right"

    @classmethod
    def parse(cls, value: Union[str, "Side"]) -> "Side":
        if isinstance(value, cls):
            return value
        text = str(value).strip().lower()
        if text == "left":
            return cls.LEFT
        if text == "right":
            return cls.RIGHT
        raise DomainError(f"side must be Left or Right, got {value!r}")


@dataclass(frozen=True)
class LinearRelation:
    """Coefficients of the recurrence phi_n = a*phi_{n-1} + b*phi_{n-2}."""

    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))

    @property
    def delta(self) -> Fraction:
        return self.a * self.a + 4 * self.b


def _check_index(n: int, bound: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise DomainError(f"index must be an integer, got {n!r}")
    if n < 0 or n > bound:
        raise DomainError(f"index must be in [0, {bound}], got {n}")


def _iterate(rel: LinearRelation, a0: Any, b1: Any, side: Side, n: int) -> Any:
    # Generic over the coefficient arithmetic so QuadExt seeds work too.
    if n == 0:
        return a0
    prev, cur = a0, b1
    if side is Side.LEFT:
        for _ in range(n - 1):
            prev, cur = cur, rel.a * cur + rel.b * prev
    else:
        for _ in range(n - 1):
            prev, cur = cur, rel.a * prev + rel.b * cur
    return cur


def relation_seq(
    rel: LinearRelation, a0: Rational, b1: Rational, side: Union[str, Side], n: int
) -> Fraction:
    """n-th term of the left or right sequence with seeds phi_0, phi_1.

    Left applies the relation as phi_{n-1} * phi_{n-2}, right as
    phi_{n-2} * phi_{n-1}; the two agree whenever a = b.
    """
    _check_index(n, RELATION_INDEX_BOUND)
    return _iterate(rel, Fraction(a0), Fraction(b1), Side.parse(side), n)


def _roots(rel: LinearRelation) -> tuple[QuadExt, QuadExt]:
    delta = rel.delta
    if delta <= 0:
        raise DomainError(f"discriminant a^2 + 4b = {delta} must be positive")
    half = Fraction(1, 2)
    sq = QuadExt.sqrt_delta(delta)
    alpha = (QuadExt.rational(rel.a, delta) + sq) * half
    beta = (QuadExt.rational(rel.a, delta) - sq) * half
    return alpha, beta


def _as_quadext(value: Union[Rational, QuadExt], delta: Fraction) -> QuadExt:
    if isinstance(value, QuadExt):
        if value.delta != delta:
            raise DomainError(
                f"seed lives in Q(sqrt({value.delta})), relation needs sqrt({delta})"
            )
        return value
    return QuadExt.rational(Fraction(value), delta)


def binet_general(rel: LinearRelation, a0: Rational, b1: Rational, n: int) -> QuadExt:
    """Closed form [(-b1 + a0*beta)*alpha^n + (b1 - a0*alpha)*beta^n]/(beta - alpha).

    Computed exactly in Q(sqrt(Delta)); always lands back on the rational
    axis and agrees with the left recursion.
    """
    _check_index(n, BINET_INDEX_BOUND)
    alpha, beta = _roots(rel)
    delta = rel.delta
    a_q = _as_quadext(Fraction(a0), delta)
    b_q = _as_quadext(Fraction(b1), delta)
    num = (-b_q + a_q * beta) * alpha**n + (b_q - a_q * alpha) * beta**n
    return num / (beta - alpha)


class RatioLimit(NamedTuple):
    limit: float
    empirical_error: float


def ratio_limit(
    rel: LinearRelation,
    a0: Union[Rational, QuadExt],
    b1: Union[Rational, QuadExt],
) -> RatioLimit:
    """Dominant root alpha of the relation, with a consecutive-ratio probe.

    Demands a strictly dominant alpha (which for Delta > 0 means a > 0) and a
    nonzero alpha-coefficient in the closed form; otherwise the sequence does
    not converge to alpha and the degeneracy is reported instead.  The probe
    measures |phi_201/phi_200 - alpha| on the exact iteration.
    """
    alpha, beta = _roots(rel)
    if rel.a == 0:
        raise DomainError("|alpha| = |beta|: no strictly dominant root")
    if rel.a < 0:
        raise DomainError("beta dominates alpha; the ratio converges to beta")
    delta = rel.delta
    a_q = _as_quadext(a0, delta)
    b_q = _as_quadext(b1, delta)
    if -b_q + a_q * beta == QuadExt.rational(0, delta):
        raise DomainError(
            "degenerate coefficient: -b1 + a0*beta = 0 locks the sequence onto beta"
        )
    lo = _iterate(rel, a_q, b_q, Side.LEFT, _RATIO_CHECK_INDEX)
    hi = _iterate(rel, a_q, b_q, Side.LEFT, _RATIO_CHECK_INDEX + 1)
    try:
        ratio = float(hi / lo)
    except DomainError:  # zero-norm denominator; fall back to float division
        ratio = float(hi) / float(lo)
    limit = float(alpha)
    return RatioLimit(limit, abs(ratio - limit))


@dataclass(frozen=True)
class DTypeSpec:
    """Integer recurrence d_n = a*d_{n-1} + b*d_{n-2} with d_0 = alpha, d_1 = beta."""

    a: int
    b: int
    alpha: int
    beta: int

    def __post_init__(self):
        for name in ("a", "b", "alpha", "beta"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool):
                raise DomainError(f"{name} must be an integer, got {value!r}")


def d_minus_one(spec: DTypeSpec) -> int:
    """Backward extension d_{-1} = (beta - a*alpha)/b; must be an integer."""
    if spec.b == 0:
        raise DomainError("d_{-1} needs b != 0")
    num = spec.beta - spec.a * spec.alpha
    if num % spec.b:
        raise DomainError(
            f"non-integral backward extension: {spec.b} does not divide {num}"
        )
    return num // spec.b


def d_seq(spec: DTypeSpec, n: int) -> int:
    """d_n by exact iteration; n = -1 is the backward extension."""
    if not isinstance(n, int) or isinstance(n, bool):
        raise DomainError(f"index must be an integer, got {n!r}")
    if n < -1 or n > D_INDEX_BOUND:
        raise DomainError(f"index must be in [-1, {D_INDEX_BOUND}], got {n}")
    if n == -1:
        return d_minus_one(spec)
    prev, cur = spec.alpha, spec.beta
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, spec.a * cur + spec.b * prev
    return cur


def _check_generators(group: GroupOracle, g0: Any, g1: Any) -> None:
    group.sanity_check(g0)
    group.sanity_check(g1)
    if not group.eq(group.op(g0, g1), group.op(g1, g0)):
        raise DomainError(f"{group.name}: the supplied generators do not commute")


def dtype_seq(
    group: GroupOracle,
    g0: Any,
    g1: Any,
    spec: DTypeSpec,
    side: Union[str, Side],
    n: int,
) -> Any:
    """Group-valued d-type sequence by literal iteration.

    Left: phi_0 = g1^alpha * g0^{d_{-1}}, phi_1 = g1^beta * g0^alpha,
    phi_n = phi_{n-1}^a * phi_{n-2}^b.  Right mirrors every product.
    """
    _check_index(n, DTYPE_INDEX_BOUND)
    which = Side.parse(side)
    dm1 = d_minus_one(spec)
    _check_generators(group, g0, g1)
    if which is Side.LEFT:
        prev = group.op(group.power(g1, spec.alpha), group.power(g0, dm1))
        cur = group.op(group.power(g1, spec.beta), group.power(g0, spec.alpha))
    else:
        prev = group.op(group.power(g0, dm1), group.power(g1, spec.alpha))
        cur = group.op(group.power(g0, spec.alpha), group.power(g1, spec.beta))
    if n == 0:
        return prev
    for _ in range(n - 1):
        if which is Side.LEFT:
            nxt = group.op(group.power(cur, spec.a), group.power(prev, spec.b))
        else:
            nxt = group.op(group.power(prev, spec.b), group.power(cur, spec.a))
        prev, cur = cur, nxt
    return cur


def dtype_closed_form(
    group: GroupOracle, g0: Any, g1: Any, spec: DTypeSpec, n: int
) -> Any:
    """phi_n = g1^{d_n} * g0^{d_{n-1}} for commuting generators."""
    _check_index(n, DTYPE_INDEX_BOUND)
    _check_generators(group, g0, g1)
    return group.op(
        group.power(g1, d_seq(spec, n)), group.power(g0, d_seq(spec, n - 1))
    )
