import random
from fractions import Fraction

import pytest

from heisencheck.exactnum import (
    CycloNum,
    cyclotomic_polynomial,
    embed,
    euler_phi,
    legendre_symbol,
    nth_root_in_prime_field,
    quadratic_gauss_sum,
)


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(9) == (1, 0, 0, 1, 0, 0, 1)
    assert cyclotomic_polynomial(11) == (1,) * 11
    assert len(cyclotomic_polynomial(55)) == euler_phi(55) + 1
    assert euler_phi(55) == 40


def test_root_powers_sum_to_zero_order_11():
    total = CycloNum.zero(11)
    for k in range(11):
        total = total + CycloNum.root(11, k)
    assert not total


def test_root_of_unity_order_9():
    xi = CycloNum.root(9)
    assert xi ** 3 * xi ** 6 == 1
    assert xi ** 9 == 1
    assert xi ** 3 != 1


def test_gauss_sum_squares():
    g11 = quadratic_gauss_sum(11)
    assert (g11 * g11).as_rational() == -11
    g5 = quadratic_gauss_sum(5)
    assert (g5 * g5).as_rational() == 5
    # sqrt5 as the explicit combination of 5th roots
    xi = CycloNum.root(5)
    assert g5 == xi + xi ** 4 - xi ** 2 - xi ** 3


def test_beta_in_big_field():
    # beta = (-1 + sqrt(-11)) / 2 satisfies t^2 + t + 3 = 0
    rm11 = quadratic_gauss_sum(11, 55)
    beta = (rm11 - 1) / 2
    assert beta * beta + beta + 3 == 0
    assert (rm11 * rm11).as_rational() == -11


def test_embed_definition():
    assert embed(CycloNum.root(5), 55) == CycloNum.root(55, 11)
    assert embed(CycloNum.one(11), 55) == CycloNum.one(55)
    g5 = embed(quadratic_gauss_sum(5), 55)
    assert (g5 * g5).as_rational() == 5
    with pytest.raises(ValueError):
        embed(CycloNum.root(9), 55)


def test_embed_injective_and_multiplicative():
    rng = random.Random(5)
    seen = {}
    for _ in range(100):
        a = CycloNum(11, [Fraction(rng.randint(-4, 4)) for _ in range(10)])
        b = CycloNum(11, [Fraction(rng.randint(-4, 4)) for _ in range(10)])
        ea, eb = embed(a, 55), embed(b, 55)
        assert embed(a * b, 55) == ea * eb
        assert embed(a + b, 55) == ea + eb
        key = ea.coeffs
        if key in seen:
            assert seen[key] == a.coeffs
        seen[key] = a.coeffs


def test_field_axioms_random():
    rng = random.Random(17)
    for _ in range(50):
        a = CycloNum(9, [Fraction(rng.randint(-5, 5)) for _ in range(6)])
        b = CycloNum(9, [Fraction(rng.randint(-5, 5)) for _ in range(6)])
        c = CycloNum(9, [Fraction(rng.randint(-5, 5)) for _ in range(6)])
        assert (a + b) * c == a * c + b * c
        assert (a * b) * c == a * (b * c)
        if a:
            assert a * a.inverse() == 1
            assert a / a == 1


def test_field_axioms_large_order():
    rng = random.Random(19)
    for _ in range(3):
        a = CycloNum(55, [Fraction(rng.randint(-3, 3)) for _ in range(40)])
        b = CycloNum(55, [Fraction(rng.randint(-3, 3)) for _ in range(40)])
        assert (a + b) * (a - b) == a * a - b * b
        if a:
            assert a * a.inverse() == 1


def test_reduction_canonicity():
    # two routes to the same value share the coefficient vector
    xi = CycloNum.root(11)
    lhs = xi ** 10
    rhs = -sum((xi ** k for k in range(10)), CycloNum.zero(11))
    assert lhs == rhs
    assert lhs.coeffs == rhs.coeffs


def test_conjugation():
    xi = CycloNum.root(11)
    assert xi.conjugate() == xi ** 10
    g = quadratic_gauss_sum(11)
    assert g.conjugate() == -g  # purely imaginary
    a = CycloNum(9, [Fraction(1), Fraction(2), Fraction(3)])
    assert a.conjugate().conjugate() == a


def test_order_mismatch_and_zero_division():
    with pytest.raises(ValueError):
        CycloNum.root(9) + CycloNum.root(11)
    with pytest.raises(ZeroDivisionError):
        CycloNum.one(9) / CycloNum.zero(9)


def test_nth_root_in_prime_field():
    assert nth_root_in_prime_field(9, 19) == 4
    assert nth_root_in_prime_field(1, 7) == 1
    assert nth_root_in_prime_field(11, 23) == 2
    with pytest.raises(ValueError):
        nth_root_in_prime_field(9, 23)


@pytest.mark.parametrize("n,q", [(9, 19), (11, 23), (9, 37), (11, 67)])
def test_nth_root_exhaustive_oracle(n, q):
    found = nth_root_in_prime_field(n, q)
    # brute force: the smallest element whose powers cycle with length n
    def order(g):
        acc, k = g, 1
        while acc != 1:
            acc = acc * g % q
            k += 1
        return k
    brute = next(g for g in range(1, q) if order(g) == n)
    assert found == brute
    assert order(found) == n


def test_legendre_symbol():
    assert [legendre_symbol(a, 11) for a in range(1, 11)] == [1, -1, 1, 1, 1, -1, -1, -1, 1, -1]
