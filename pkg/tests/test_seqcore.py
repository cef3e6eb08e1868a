import random

import pytest

from fibquat import INDEX_BOUND, DomainError, fib, fib_pair, gen_fib_lucas, lucas


def naive_window(lo, hi):
    """fib values for lo..hi by plain iteration, lo may be negative."""
    vals = {0: 0, 1: 1}
    for n in range(2, hi + 1):
        vals[n] = vals[n - 1] + vals[n - 2]
    for n in range(-1, lo - 1, -1):
        vals[n] = vals[n + 2] - vals[n + 1]
    return vals


def test_matches_naive_iteration():
    vals = naive_window(-121, 321)
    for n in range(-120, 321):
        assert fib(n) == vals[n], n
        assert lucas(n) == vals[n - 1] + vals[n + 1], n


def test_signed_index_reflection():
    for n in range(0, 100):
        assert fib(-n) == (-1) ** (n + 1) * fib(n)
        assert lucas(-n) == (-1) ** n * lucas(n)


def test_recurrence_at_large_random_indices():
    rng = random.Random(11)
    for _ in range(40):
        n = rng.randint(-(10**5), 10**5)
        assert fib(n + 1) == fib(n) + fib(n - 1)
        assert lucas(n + 1) == lucas(n) + lucas(n - 1)


def test_fib_pair_consistency():
    for n in (0, 1, 2, 3, 50, 999):
        assert fib_pair(n) == (fib(n), fib(n + 1))


def test_lucas_fib_bridge():
    # l_n = f_{n-1} + f_{n+1}
    for n in range(-50, 51):
        assert lucas(n) == fib(n - 1) + fib(n + 1)


def test_gen_fib_lucas():
    rng = random.Random(12)
    for _ in range(30):
        p, q = rng.randint(-9, 9), rng.randint(-9, 9)
        n = rng.randint(1, 200)
        assert gen_fib_lucas(p, q, n) == p * fib(n - 1) + q * lucas(n)
        # follows the Fibonacci recurrence in n
        assert gen_fib_lucas(p, q, n + 1) == gen_fib_lucas(p, q, n) + gen_fib_lucas(
            p, q, n - 1
        )
    assert gen_fib_lucas(2, 3, 0) == 8  # p + 2q, via f_{-1} = 1
    assert gen_fib_lucas(1, 0, 7) == fib(6)
    assert gen_fib_lucas(0, 1, 7) == lucas(7)
    with pytest.raises(DomainError):
        gen_fib_lucas(1, 1, -1)


def test_known_values():
    assert [fib(n) for n in range(11)] == [0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55]
    assert [lucas(n) for n in range(8)] == [2, 1, 3, 4, 7, 11, 18, 29]
    assert fib(100) == 354224848179261915075


def test_index_bounds():
    assert fib(INDEX_BOUND) > 0  # top of the range is allowed
    for bad in (INDEX_BOUND + 1, -(INDEX_BOUND + 1)):
        with pytest.raises(DomainError):
            fib(bad)
        with pytest.raises(DomainError):
            lucas(bad)
    with pytest.raises(DomainError):
        fib("7")
    with pytest.raises(DomainError):
        fib(True)
