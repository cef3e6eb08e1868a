"""Exact arithmetic in Q adjoined with a formal square root of delta.

Elements are u + v*sqrt(delta) with rational u, v and a fixed rational
delta > 0 per arithmetic context.  The representation is the quotient ring
Q[x]/(x^2 - delta): no square-free reduction is applied, so delta may be a
perfect square; equality stays componentwise and division is defined exactly
when the norm u^2 - delta*v^2 is nonzero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import DomainError

_RationalLike = Union[int, Fraction]


def _coerce(value, delta: Fraction) -> "QuadExt":
    if isinstance(value, QuadExt):
        if value.delta != delta:
            raise DomainError(
                f"mixed discriminants {value.delta} and {delta} in one expression"
            )
        return value
    if isinstance(value, (int, Fraction)):
        return QuadExt(Fraction(value), Fraction(0), delta)
    return NotImplemented


@dataclass(frozen=True)
class QuadExt:
    """u + v*sqrt(delta) with exact rational components."""

    u: Fraction
    v: Fraction
    delta: Fraction

    def __post_init__(self):
        object.__setattr__(self, "u", Fraction(self.u))
        object.__setattr__(self, "v", Fraction(self.v))
        object.__setattr__(self, "delta", Fraction(self.delta))
        if self.delta <= 0:
            raise DomainError(f"discriminant must be positive, got {self.delta}")

    @classmethod
    def rational(cls, value: _RationalLike, delta: _RationalLike) -> "QuadExt":
        return cls(Fraction(value), Fraction(0), Fraction(delta))

    @classmethod
    def sqrt_delta(cls, delta: _RationalLike) -> "QuadExt":
        return cls(Fraction(0), Fraction(1), Fraction(delta))

    @property
    def is_rational(self) -> bool:
        return self.v == 0

    def conjugate(self) -> "QuadExt":
        return QuadExt(self.u, -self.v, self.delta)

    def norm(self) -> Fraction:
        return self.u * self.u - self.delta * self.v * self.v

    def __add__(self, other):
        other = _coerce(other, self.delta)
        if other is NotImplemented:
            return NotImplemented
        return QuadExt(self.u + other.u, self.v + other.v, self.delta)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.u, -self.v, self.delta)

    def __sub__(self, other):
        other = _coerce(other, self.delta)
        if other is NotImplemented:
            return NotImplemented
        return QuadExt(self.u - other.u, self.v - other.v, self.delta)

    def __rsub__(self, other):
        other = _coerce(other, self.delta)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _coerce(other, self.delta)
        if other is NotImplemented:
            return NotImplemented
        return QuadExt(
            self.u * other.u + self.delta * self.v * other.v,
            self.u * other.v + self.v * other.u,
            self.delta,
        )

    __rmul__ = __mul__

    def inverse(self) -> "QuadExt":
        n = self.norm()
        if n == 0:
            raise DomainError("element with zero norm is not invertible")
        return QuadExt(self.u / n, -self.v / n, self.delta)

    def __truediv__(self, other):
        other = _coerce(other, self.delta)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other, self.delta)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent: int) -> "QuadExt":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = QuadExt.rational(1, self.delta)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __float__(self) -> float:
        return float(self.u) + float(self.v) * float(self.delta) ** 0.5

    def __str__(self) -> str:
        return f"{self.u} + {self.v}*sqrt({self.delta})"
