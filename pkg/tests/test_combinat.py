"""Exact-arithmetic primitives against independent small-scale oracles."""

from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

import pytest

from rwl.combinat import CombCache, as_integer, binomial, catalan, factorial, render_exact


def oracle_factorial(k):
    """Repeated multiplication, no shortcuts."""
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


def oracle_pascal_rows(rows):
    """Pascal's triangle built row by row."""
    triangle = [[1]]
    for n in range(1, rows):
        prev = triangle[-1]
        row = [1]
        for k in range(1, n):
            row.append(prev[k - 1] + prev[k])
        row.append(1)
        triangle.append(row)
    return triangle


def oracle_catalan_list(count):
    """Catalan convolution recurrence C_{k+1} = sum C_i C_{k-i}."""
    values = [1]
    for k in range(count - 1):
        values.append(sum(values[i] * values[k - i] for i in range(k + 1)))
    return values


def test_factorial_matches_repeated_multiplication():
    for k in range(0, 40):
        assert factorial(k) == oracle_factorial(k)


def test_factorial_spot_values():
    assert factorial(0) == 1
    assert factorial(5) == 120
    assert factorial(20) == 2432902008176640000


def test_factorial_rejects_negative():
    with pytest.raises(ValueError):
        factorial(-1)


def test_binomial_matches_pascal_triangle():
    triangle = oracle_pascal_rows(33)
    for n in range(33):
        for k in range(n + 1):
            assert binomial(n, k) == triangle[n][k]


def test_binomial_spot_values():
    assert binomial(4, 2) == 6
    assert binomial(30, 15) == 155117520
    assert binomial(5, 7) == 0
    assert binomial(5, -1) == 0
    with pytest.raises(ValueError):
        binomial(-2, 1)


def test_binomial_factorial_identity():
    # C(n,k) k! (n-k)! == n! across the whole small range
    for n in range(0, 61):
        for k in range(0, n + 1):
            assert binomial(n, k) * factorial(k) * factorial(n - k) == factorial(n)


def test_binomial_pascal_rule():
    for n in range(1, 50):
        for k in range(0, n + 1):
            assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


def test_catalan_matches_convolution_recurrence():
    values = oracle_catalan_list(13)
    for k, want in enumerate(values):
        assert catalan(k) == want


def test_catalan_spot_values():
    assert catalan(0) == 1
    assert catalan(3) == 5
    assert catalan(3) == binomial(6, 3) // 4
    assert catalan(10) == 16796


def test_catalan_binomial_identity():
    for k in range(41):
        assert (k + 1) * catalan(k) == binomial(2 * k, k)


def test_cache_growth_beyond_initial_rows():
    cache = CombCache(rows=4)
    assert cache.factorial(10) == 3628800
    assert cache.binomial(200, 100) == binomial(200, 100)
    assert cache.catalan(12) == catalan(12)


def test_concurrent_lookups_return_identical_values():
    cache = CombCache(rows=0)
    ks = list(range(300)) * 4

    with ThreadPoolExecutor(max_workers=8) as pool:
        results = list(pool.map(cache.factorial, ks))
    assert results == [oracle_factorial(k) for k in ks]


def test_as_integer():
    assert as_integer(Fraction(10, 2)) == 5
    with pytest.raises(ArithmeticError):
        as_integer(Fraction(1, 2))


def test_render_exact():
    assert render_exact(5) == "5"
    assert render_exact(Fraction(3, 2)) == "3/2"
    assert render_exact(Fraction(4, 2)) == "2"
    assert render_exact(Fraction(-7, 3)) == "-7/3"
