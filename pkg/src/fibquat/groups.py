"""Abelian-group backends for the group-valued recurrences.

A backend supplies identity, the operation, inverses, equality, and element
parsing; integer powers (including negative) come for free via
square-and-multiply.  Three concrete groups ship here: the integers under
addition, the positive-side rationals under multiplication, and the unit
group mod m.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from fractions import Fraction
from math import gcd
from typing import Any

from .errors import DomainError


class GroupOracle(ABC):
    """Minimal interface a group must expose.

    Elements are opaque to callers; `parse` turns user text into an element
    and `canon` renders one back.  Implementations must be abelian for the
    closed-form results in genseq to hold, but the interface itself does not
    assume it.
    """

    name: str = "group"

    @abstractmethod
    def identity(self) -> Any: ...

    @abstractmethod
    def op(self, x: Any, y: Any) -> Any: ...

    @abstractmethod
    def inverse(self, x: Any) -> Any: ...

    def eq(self, x: Any, y: Any) -> bool:
        return x == y

    @abstractmethod
    def parse(self, text: str) -> Any: ...

    def canon(self, x: Any) -> str:
        return str(x)

    def power(self, x: Any, k: int) -> Any:
        """x composed with itself k times; negative k through the inverse."""
        if k < 0:
            return self.power(self.inverse(x), -k)
        acc = self.identity()
        base = x
        while k:
            if k & 1:
                acc = self.op(acc, base)
            base = self.op(base, base)
            k >>= 1
        return acc

    def sanity_check(self, sample: Any) -> None:
        """Cheap identity/inverse axioms on one element; raises on violation."""
        e = self.identity()
        if not self.eq(self.op(e, sample), sample):
            raise DomainError(f"{self.name}: identity fails on the left")
        if not self.eq(self.op(sample, e), sample):
            raise DomainError(f"{self.name}: identity fails on the right")
        if not self.eq(self.op(sample, self.inverse(sample)), e):
            raise DomainError(f"{self.name}: inverse axiom fails")


class IntegersAdditive(GroupOracle):
    name = "integers-additive"

    def identity(self) -> int:
        return 0

    def op(self, x: int, y: int) -> int:
        return x + y

    def inverse(self, x: int) -> int:
        return -x

    def parse(self, text: str) -> int:
        return int(text)


class RationalsMultiplicative(GroupOracle):
    """Nonzero rationals under multiplication."""

    name = "rationals-multiplicative"

    def identity(self) -> Fraction:
        return Fraction(1)

    def op(self, x: Fraction, y: Fraction) -> Fraction:
        return x * y

    def inverse(self, x: Fraction) -> Fraction:
        if x == 0:
            raise DomainError("0 is not invertible")
        return 1 / x

    def parse(self, text: str) -> Fraction:
        value = Fraction(text)
        if value == 0:
            raise DomainError("0 is not a group element")
        return value


class UnitsMod(GroupOracle):
    """Multiplicative units modulo m, m >= 2; elements are ints in [0, m)."""

    def __init__(self, modulus: int):
        if not isinstance(modulus, int) or modulus < 2:
            raise DomainError("modulus must be an integer >= 2")
        self.modulus = modulus
        self.name = f"units-mod:{modulus}"

    def identity(self) -> int:
        return 1 % self.modulus

    def op(self, x: int, y: int) -> int:
        return x * y % self.modulus

    def inverse(self, x: int) -> int:
        return pow(x, -1, self.modulus)

    def parse(self, text: str) -> int:
        value = int(text) % self.modulus
        if gcd(value, self.modulus) != 1:
            raise DomainError(f"{value} is not a unit mod {self.modulus}")
        return value


def group_from_name(name: str) -> GroupOracle:
    """Build a group from its wire name.

    Recognized: integers-additive, rationals-multiplicative, units-mod:<m>.
    """
    if name == "integers-additive":
        return IntegersAdditive()
    if name == "rationals-multiplicative":
        return RationalsMultiplicative()
    if name.startswith("units-mod:"):
        tail = name[len("units-mod:"):]
        try:
            modulus = int(tail)
        except ValueError:
            raise DomainError(f"bad modulus in {name!r}") from None
        return UnitsMod(modulus)
    raise DomainError(
        f"unknown group {name!r}; valid: integers-additive, "
        f"rationals-multiplicative, units-mod:<m>"
    )
