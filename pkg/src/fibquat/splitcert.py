"""Split certificates for rational quaternion algebras.

Three independent routes are exposed: construction of the nine certificate
families with their conic points, direct verification of any claimed point
on a*x^2 + b*y^2 = z^2, and a local-symbol decision procedure that factors
the parameters and evaluates the Hilbert symbol at infinity, at 2, and at
every odd prime dividing a numerator or denominator.  The decision route
shares no logic with the certificates, so agreement between the two is a
real cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import isqrt, lcm
from typing import Optional, Union

from .errors import DomainError
from .factoring import Budget, DEFAULT_BUDGET, factorize
from .seqcore import fib, lucas

SEARCH_HEIGHT_BOUND = 10**4


@dataclass(frozen=True)
class ConicSpec:
    """The conic a*x^2 + b*y^2 = z^2 with nonzero rational coefficients."""

    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if self.a == 0 or self.b == 0:
            raise DomainError("conic coefficients must be nonzero")


@dataclass(frozen=True)
class RationalPoint:
    x0: Fraction
    y0: Fraction
    z0: Fraction

    def __post_init__(self):
        for name in ("x0", "y0", "z0"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    def coords(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.x0, self.y0, self.z0)


class Decision(Enum):
    SPLIT = "Split"
    DIVISION = "Division"


FAMILY_IDS = ("1", "2", "3", "4", "5", "6", "7", "8a", "8b", "9")

# family id -> smallest n with nonzero parameters and nonzero strict point.
FAMILY_MIN_N = {
    "1": 0,
    "2": 1,
    "3": 2,
    "4": 1,
    "5": 0,
    "6": 1,
    "7": 2,
    "8a": 2,
    "8b": 2,
    "9": 2,
}


def parse_family(k: Union[int, str]) -> str:
    text = str(k)
    if text == "8":
        raise DomainError("family 8 has two certificates; use '8a' or '8b'")
    if text not in FAMILY_IDS:
        raise DomainError(f"unknown family {k!r}; valid: {', '.join(FAMILY_IDS)}")
    return text


def certificate_family(k: Union[int, str], n: int) -> tuple[ConicSpec, RationalPoint]:
    """Construct family k's conic and its certified rational point at index n."""
    fam = parse_family(k)
    min_n = FAMILY_MIN_N[fam]
    if n < min_n:
        raise DomainError(
            f"family {fam} needs n >= {min_n}: a parameter or strict point "
            f"coordinate degenerates below that"
        )
    one = Fraction(1)
    if fam == "1":
        spec = ConicSpec(Fraction(fib(10 * n + 5)), Fraction(-1))
        point = RationalPoint(one, Fraction(fib(5 * n + 2)), Fraction(fib(5 * n + 3)))
    elif fam == "2":
        spec = ConicSpec(Fraction(lucas(20 * n), 5), Fraction(-2, 5))
        point = RationalPoint(one, one, Fraction(fib(10 * n)))
    elif fam == "3":
        spec = ConicSpec(
            Fraction(fib(n + 1) * fib(n - 1)), Fraction((-1) ** (n - 1))
        )
        point = RationalPoint(one, one, Fraction(fib(n)))
    elif fam == "4":
        spec = ConicSpec(Fraction(5), Fraction((-1) ** n))
        point = RationalPoint(Fraction(fib(n)), Fraction(2), Fraction(lucas(n)))
    elif fam == "5":
        spec = ConicSpec(Fraction(lucas(2 * n) * lucas(2 * n + 2)), Fraction(-5))
        point = RationalPoint(one, Fraction(fib(2 * n + 1)), one)
    elif fam == "6":
        spec = ConicSpec(Fraction(2 * fib(n) * fib(n + 1)), Fraction(-fib(2 * n)))
        point = RationalPoint(one, one, Fraction(fib(n)))
    elif fam == "7":
        spec = ConicSpec(Fraction(fib(2 * n)), Fraction(-2 * fib(n) * fib(n - 1)))
        point = RationalPoint(one, one, Fraction(fib(n)))
    elif fam == "8a":
        spec = ConicSpec(Fraction(fib(n - 1) * fib(n + 1)), Fraction(fib(n) ** 2))
        point = RationalPoint(Fraction(2), one, Fraction(lucas(n)))
    elif fam == "8b":
        spec = ConicSpec(one, Fraction(-fib(n - 1) * fib(n + 1)))
        point = RationalPoint(Fraction(lucas(n)), Fraction(2), Fraction(fib(n)))
    else:  # "9"
        spec = ConicSpec(Fraction(fib(2 * n)), one)
        point = RationalPoint(one, Fraction(fib(n - 1)), Fraction(fib(n + 1)))
    assert verify_point(spec, point, strict=False)
    return spec, point


def verify_point(spec: ConicSpec, pt: RationalPoint, strict: bool = False) -> bool:
    """Exact check of a*x0^2 + b*y0^2 = z0^2 plus the zero policy.

    Strict mode demands all three coordinates nonzero; non-strict only
    excludes the all-zero triple.
    """
    x0, y0, z0 = pt.coords()
    if strict:
        if x0 == 0 or y0 == 0 or z0 == 0:
            return False
    elif x0 == 0 and y0 == 0 and z0 == 0:
        return False
    return spec.a * x0 * x0 + spec.b * y0 * y0 == z0 * z0


def search_point(spec: ConicSpec, height: int) -> Optional[RationalPoint]:
    """Scan integer triples with coordinates in [0, height], lexicographically.

    The conic is cleared to A*x^2 + B*y^2 = L*z^2 with integer A, B, L, and z
    is derived from each (x, y) by an exact square-root test, which walks the
    same solution set as a triple loop in the same order.  Returns the first
    nonzero solution or None; absence proves nothing.
    """
    if height < 1 or height > SEARCH_HEIGHT_BOUND:
        raise DomainError(f"height must be in [1, {SEARCH_HEIGHT_BOUND}]")
    scale = lcm(spec.a.denominator, spec.b.denominator)
    A = int(spec.a * scale)
    B = int(spec.b * scale)
    for x in range(height + 1):
        ax2 = A * x * x
        for y in range(height + 1):
            s = ax2 + B * y * y
            if s < 0 or s % scale:
                continue
            q = s // scale
            z = isqrt(q)
            if z * z == q and z <= height and (x or y or z):
                return RationalPoint(Fraction(x), Fraction(y), Fraction(z))
    return None


def _split_valuation(value: Fraction, p: int) -> tuple[int, Fraction]:
    """Write value = p^e * unit with a p-free unit; value nonzero."""
    e = 0
    num, den = value.numerator, value.denominator
    while num % p == 0:
        num //= p
        e += 1
    while den % p == 0:
        den //= p
        e -= 1
    return e, Fraction(num, den)


def _unit_residue(unit: Fraction, modulus: int) -> int:
    return unit.numerator * pow(unit.denominator, -1, modulus) % modulus


def _legendre(u: int, p: int) -> int:
    r = pow(u, (p - 1) // 2, p)
    return 1 if r == 1 else -1


def hilbert_symbol(a: Fraction, b: Fraction, place: Union[str, int]) -> int:
    """Hilbert symbol (a, b) at a place of Q: 'inf', 2, or an odd prime."""
    a = Fraction(a)
    b = Fraction(b)
    if a == 0 or b == 0:
        raise DomainError("Hilbert symbol needs nonzero arguments")
    if place == "inf":
        return -1 if a < 0 and b < 0 else 1
    p = int(place)
    if p == 2:
        e_a, u = _split_valuation(a, 2)
        e_b, w = _split_valuation(b, 2)
        ru = _unit_residue(u, 8)
        rw = _unit_residue(w, 8)
        eps_u = (ru - 1) // 2 % 2
        eps_w = (rw - 1) // 2 % 2
        omega_u = (ru * ru - 1) // 8 % 2
        omega_w = (rw * rw - 1) // 8 % 2
        exponent = eps_u * eps_w + e_a * omega_w + e_b * omega_u
        return -1 if exponent % 2 else 1
    if p < 3 or p % 2 == 0:
        raise DomainError(f"place must be 'inf', 2, or an odd prime, got {place!r}")
    e_a, u = _split_valuation(a, p)
    e_b, w = _split_valuation(b, p)
    sign = -1 if (e_a * e_b * ((p - 1) // 2)) % 2 else 1
    value = sign
    if e_b % 2:
        value *= _legendre(_unit_residue(u, p), p)
    if e_a % 2:
        value *= _legendre(_unit_residue(w, p), p)
    return value


def _odd_primes_of(value: Fraction, budget: Budget) -> set[int]:
    primes: set[int] = set()
    for part in (abs(value.numerator), value.denominator):
        for p in factorize(part, budget):
            if p > 2:
                primes.add(p)
    return primes


def decide_split_hilbert(
    spec: ConicSpec, budget: Optional[Union[int, Budget]] = None
) -> Decision:
    """Decide split vs division through local symbols alone.

    Factors the parameters (budgeted; UndecidedError on exhaustion), then
    checks (a, b) at infinity, 2, and every odd prime of the numerators and
    denominators.  Symbols at all other places are automatically +1.
    """
    if budget is None:
        bud = Budget(DEFAULT_BUDGET)
    elif isinstance(budget, Budget):
        bud = budget
    else:
        bud = Budget(int(budget))
    a, b = spec.a, spec.b
    if hilbert_symbol(a, b, "inf") != 1:
        return Decision.DIVISION
    if hilbert_symbol(a, b, 2) != 1:
        return Decision.DIVISION
    for p in sorted(_odd_primes_of(a, bud) | _odd_primes_of(b, bud)):
        if hilbert_symbol(a, b, p) != 1:
            return Decision.DIVISION
    return Decision.SPLIT
