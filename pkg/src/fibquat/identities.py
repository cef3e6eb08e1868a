"""Registry of checkable Fibonacci/Lucas identities plus ring membership tests.

Each identity id maps to one predicate over n evaluated in exact integer
arithmetic; check_identity reports both sides so failures carry full
witnesses.  The membership predicates implement the derived characterization
A = M = 5Z (every f(5n) is a multiple of f(5) = 5).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from enum import Enum

from .errors import DomainError
from .seqcore import fib, lucas


class IdentityId(str, Enum):
    P21_I = "P21_I"
    P21_II = "P21_II"
    P21_III = "P21_III"
    P21_IV = "P21_IV"
    P21_V = "P21_V"
    P21_VI = "P21_VI"
    P21_VII = "P21_VII"
    P21_VIII = "P21_VIII"
    P21_IX = "P21_IX"
    P21_X = "P21_X"
    P21_XI = "P21_XI"
    P21_XII = "P21_XII"
    P21_XIII = "P21_XIII"
    P21_XIV = "P21_XIV"
    P35_2 = "P35_2"
    # Diagnostic: the uncorrected printed form of ix, kept to document that it
    # fails (the shipped P21_IX uses the corrected index f(2n+1)).
    P21_IX_AS_PRINTED = "P21_IX_as_printed"

    @classmethod
    def parse(cls, text: str) -> "IdentityId":
        for member in cls:
            if member.value == text or member.value.lower() == text.lower():
                return member
        raise DomainError(f"unknown identity id {text!r}")


@dataclass(frozen=True)
class CheckResult:
    identity: IdentityId
    n: int
    holds: bool
    lhs: int
    rhs: int


@dataclass(frozen=True)
class MTerm:
    p: int
    q: int
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise DomainError(f"term index must be non-negative, got {self.n}")


@dataclass
class Report:
    identity: IdentityId
    lo: int
    hi: int
    checked: int
    failures: list[CheckResult] = field(default_factory=list)
    millis: float = 0.0

    def to_dict(self, include_millis: bool = True) -> dict:
        out = {
            "identity": self.identity.value,
            "range": [self.lo, self.hi],
            "checked": self.checked,
            "failures": [
                {"n": f.n, "lhs": str(f.lhs), "rhs": str(f.rhs)} for f in self.failures
            ],
        }
        if include_millis:
            out["millis"] = self.millis
        return out


def _sign(n: int) -> int:
    return -1 if n % 2 else 1


# id -> (domain_min, lhs(n), rhs(n)).  Both sides are exact integers; for the
# divisibility clause i the two residues being compared are reported instead.
_REGISTRY = {
    IdentityId.P21_I: (0, lambda n: fib(n) % 5, lambda n: n % 5),
    IdentityId.P21_II: (0, lambda n: fib(2 * n), lambda n: lucas(n) * fib(n)),
    IdentityId.P21_III: (
        0,
        lambda n: fib(n) ** 2 + fib(n + 1) ** 2,
        lambda n: fib(2 * n + 1),
    ),
    IdentityId.P21_IV: (
        1,
        lambda n: fib(n) ** 2 - fib(n + 1) * fib(n - 1),
        lambda n: _sign(n - 1),
    ),
    IdentityId.P21_V: (0, lambda n: fib(-n), lambda n: _sign(n + 1) * fib(n)),
    IdentityId.P21_VI: (0, lambda n: lucas(-n), lambda n: _sign(n) * lucas(n)),
    IdentityId.P21_VII: (
        0,
        lambda n: lucas(n) ** 2,
        lambda n: 5 * fib(n) ** 2 + 4 * _sign(n),
    ),
    IdentityId.P21_VIII: (
        0,
        lambda n: lucas(2 * n),
        lambda n: lucas(n) ** 2 + 2 * _sign(n + 1),
    ),
    IdentityId.P21_IX: (
        0,
        lambda n: lucas(2 * n) * lucas(2 * n + 2),
        lambda n: 5 * fib(2 * n + 1) ** 2 + 1,
    ),
    IdentityId.P21_X: (
        0,
        lambda n: fib(2 * n) + fib(n) ** 2,
        lambda n: 2 * fib(n) * fib(n + 1),
    ),
    IdentityId.P21_XI: (
        1,
        lambda n: fib(2 * n) - fib(n) ** 2,
        lambda n: 2 * fib(n) * fib(n - 1),
    ),
    IdentityId.P21_XII: (
        1,
        lambda n: lucas(n) ** 2 - fib(n) ** 2,
        lambda n: 4 * fib(n - 1) * fib(n + 1),
    ),
    IdentityId.P21_XIII: (
        1,
        lambda n: fib(2 * n),
        lambda n: fib(n + 1) ** 2 - fib(n - 1) ** 2,
    ),
    IdentityId.P21_XIV: (
        0,
        lambda n: lucas(4 * n),
        lambda n: 5 * fib(2 * n) ** 2 + 2,
    ),
    IdentityId.P35_2: (
        0,
        lambda n: 5 * (fib(2 * n + 1) + fib(2 * n + 5)),
        lambda n: lucas(2 * n) + lucas(2 * n + 2) + lucas(2 * n + 4) + lucas(2 * n + 6),
    ),
    IdentityId.P21_IX_AS_PRINTED: (
        0,
        lambda n: lucas(2 * n) * lucas(2 * n + 2),
        lambda n: 5 * fib(n + 1) ** 2 + 1,
    ),
}


def domain_min(identity: IdentityId) -> int:
    return _REGISTRY[identity][0]


def check_identity(identity: IdentityId, n: int) -> CheckResult:
    """Evaluate both sides of one identity at n and report equality.

    Clause i is the biconditional (5 | f(n)) iff (5 | n); its result carries
    the two residues rather than two equal values.
    """
    lo, lhs_fn, rhs_fn = _REGISTRY[identity]
    if n < lo:
        raise DomainError(f"{identity.value} needs n >= {lo} (got {n})")
    lhs = lhs_fn(n)
    rhs = rhs_fn(n)
    if identity is IdentityId.P21_I:
        holds = (lhs == 0) == (rhs == 0)
    else:
        holds = lhs == rhs
    return CheckResult(identity, n, holds, lhs, rhs)


def verify_range(identity: IdentityId, n_lo: int, n_hi: int) -> Report:
    """Run check_identity over [n_lo, n_hi] and collect failures with witnesses."""
    if n_lo > n_hi:
        raise DomainError(f"empty range [{n_lo}, {n_hi}]")
    lo = domain_min(identity)
    if n_lo < lo:
        raise DomainError(f"{identity.value} needs n >= {lo} (range starts at {n_lo})")
    started = time.perf_counter()
    failures = []
    for n in range(n_lo, n_hi + 1):
        result = check_identity(identity, n)
        if not result.holds:
            failures.append(result)
    millis = (time.perf_counter() - started) * 1000.0
    return Report(identity, n_lo, n_hi, n_hi - n_lo + 1, failures, millis)


def f5_factor(n: int) -> int:
    """Return k with fib(5n) = k * fib(5) = 5k."""
    if n < 0:
        raise DomainError(f"index must be non-negative, got {n}")
    value = fib(5 * n)
    assert value % 5 == 0
    return value // 5


def in_ring_A(x: int) -> bool:
    """Membership in the ring of multiples of Fibonacci numbers with index 5n.

    Every f(5n) is a multiple of f(5) = 5 and 5 itself is realized, so the
    ring is exactly 5Z.
    """
    return x % 5 == 0


def m_element(terms: list[MTerm]) -> int:
    """Sum of generalized Fibonacci-Lucas values p*f(5n) + 5q*l(5n+1).

    The f-component index is forced to a multiple of 5, which makes every
    term (hence the sum) a multiple of 5.
    """
    if not terms:
        raise DomainError("term list must be non-empty")
    total = 0
    for t in terms:
        total += t.p * fib(5 * t.n) + 5 * t.q * lucas(5 * t.n + 1)
    assert total % 5 == 0
    return total


def in_ideal_M(x: int) -> bool:
    """Membership in the ideal generated by m_element sums; equals 5Z."""
    return x % 5 == 0


def printed_m_term(p: int, q: int, n: int) -> int:
    """Diagnostic: the uncorrected reading g(5n) with parameters (p, 5q).

    Under the plain index convention this is p*f(5n-1) + 5q*l(5n), which is
    not always divisible by 5 (p=1, q=1, n=1 gives 58); kept to document why
    m_element shifts the f-index instead.
    """
    return p * fib(5 * n - 1) + 5 * q * lucas(5 * n)
