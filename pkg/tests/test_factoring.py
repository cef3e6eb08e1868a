import random

import pytest
import sympy

from fibquat import Budget, DomainError, UndecidedError, factorize, lucas
from fibquat.factoring import _cache, _ecm_curve


def test_small_numbers_match_sympy():
    rng = random.Random(41)
    for _ in range(60):
        n = rng.randint(2, 10**6)
        _cache.pop(n, None)
        assert factorize(n) == sympy.factorint(n), n


def test_rho_range_semiprimes():
    rng = random.Random(42)
    for _ in range(6):
        p = sympy.nextprime(rng.randint(10**7, 10**8))
        q = sympy.nextprime(rng.randint(10**7, 10**8))
        n = p * q
        _cache.pop(n, None)
        assert factorize(n) == sympy.factorint(n), n


def test_perfect_powers():
    assert factorize(2**64) == {2: 64}
    assert factorize(3**41) == {3: 41}
    assert factorize(10**30) == {2: 30, 5: 30}
    p = 1000003
    assert factorize(p**3) == {p: 3}


def test_edges_and_validation():
    assert factorize(1) == {}
    assert factorize(2) == {2: 1}
    for bad in (0, -6, 2.5, "12", True):
        with pytest.raises(DomainError):
            factorize(bad)


def test_postconditions_on_random_values():
    rng = random.Random(43)
    for _ in range(10):
        n = rng.randint(10**10, 10**12)
        factors = factorize(n)
        prod = 1
        for prime, exp in factors.items():
            assert sympy.isprime(prime)
            prod *= prime**exp
        assert prod == n


def test_deterministic_work_accounting():
    n = 10**9 + 7
    runs = []
    for _ in range(2):
        _cache.pop(n, None)
        bud = Budget(10**9)
        factorize(n, bud)
        runs.append(bud.spent)
    assert runs[0] == runs[1] > 0


def test_budget_exhaustion_is_an_error_not_a_guess():
    big = lucas(462)
    with pytest.raises(UndecidedError) as info:
        factorize(big, 2_000)
    assert info.value.limit == 2_000
    assert info.value.spent > info.value.limit
    assert big not in _cache  # failures are never memoized


def test_budget_charge_overflow_point():
    bud = Budget(10)
    bud.charge(10)
    with pytest.raises(UndecidedError):
        bud.charge(1)


def test_tuned_curve_splits_the_hard_cofactor():
    # Smallest composite in the suite that defeats rho and p-1; the first
    # sigma at the lightest ECM level must pull out its 20-digit factor.
    c44 = 66255407199238112548487160876899830155252641
    factor = _ecm_curve(c44, 260, 11_000, 1_100_000, Budget(10**9))
    assert factor == 17276792316211992881
    assert c44 % factor == 0


def test_memoization_reuses_results():
    n = 999983 * 999979
    _cache.pop(n, None)
    first = factorize(n)
    bud = Budget(1)  # would be exhausted immediately if any work ran
    assert factorize(n, bud) == first
    assert bud.spent == 0


def test_acceptance_scale_values_are_cached_and_complete():
    # test_acceptance runs first and factors every large conic parameter;
    # spot-check two of the hardest entries straight from the cache.
    for n in (lucas(320), lucas(340)):
        factors = factorize(n)
        prod = 1
        for prime, exp in factors.items():
            prod *= prime**exp
        assert prod == n and all(sympy.isprime(p) for p in factors)
