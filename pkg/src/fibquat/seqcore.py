"""Fibonacci, Lucas, and generalized Fibonacci-Lucas numbers for signed indices.

All values are exact Python integers.  Negative indices follow the sign rules
f(-n) = (-1)^(n+1) f(n) and l(-n) = (-1)^n l(n), so the non-negative fast
doubling kernel is the only code path that iterates.
"""

from functools import lru_cache

from .errors import DomainError

INDEX_BOUND = 10**6


def _check_index(n: int, lo: int = -INDEX_BOUND) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise DomainError(f"index must be an integer, got {n!r}")
    if n < lo or n > INDEX_BOUND:
        raise DomainError(f"index {n} outside [{lo}, {INDEX_BOUND}]")


@lru_cache(maxsize=8192)
def fib_pair(n: int) -> tuple[int, int]:
    """Return (f(n), f(n+1)) for n >= 0 by iterative fast doubling."""
    _check_index(n, lo=0)
    a, b = 0, 1  # (f(0), f(1))
    for i in range(n.bit_length() - 1, -1, -1):
        # doubling step: f(2k) = f(k)(2f(k+1)-f(k)), f(2k+1) = f(k)^2+f(k+1)^2
        c = a * (2 * b - a)
        d = a * a + b * b
        if (n >> i) & 1:
            a, b = d, c + d
        else:
            a, b = c, d
    return a, b


def fib(n: int) -> int:
    """Return f(n) for |n| <= 10^6, negative indices included."""
    _check_index(n)
    if n >= 0:
        return fib_pair(n)[0]
    m = -n
    value = fib_pair(m)[0]
    return value if m % 2 == 1 else -value


def lucas(n: int) -> int:
    """Return l(n) for |n| <= 10^6, negative indices included."""
    _check_index(n)
    if n >= 0:
        a, b = fib_pair(n)
        return 2 * b - a
    m = -n
    a, b = fib_pair(m)
    value = 2 * b - a
    return value if m % 2 == 0 else -value


def gen_fib_lucas(p: int, q: int, n: int) -> int:
    """Return g(n) = p*f(n-1) + q*l(n) for n >= 0.

    The single closed form reproduces the seeds g(0) = p + 2q (via f(-1) = 1)
    and g(1) = q, and satisfies the Fibonacci recursion for n >= 2.
    """
    _check_index(n, lo=0)
    return p * fib(n - 1) + q * lucas(n)
