from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ptord.errors import InputError, ResourceLimit
from ptord.modular import (
    Fp2Element,
    char_poly_roots,
    cyclotomic_orders,
    factorize,
    is_prime,
    is_pth_power_Ql,
    legendre,
    mult_order,
    primitive_root_of_unity,
    smallest_nonresidue,
    sqrt_mod,
)
from ptord.oracles import exhaustive_pth_power

ODD_PRIMES = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 97, 101]


def test_is_prime_against_sieve():
    sieve = [True] * 2000
    sieve[0] = sieve[1] = False
    for i in range(2, 45):
        for j in range(i * i, 2000, i):
            sieve[j] = False
    assert [n for n in range(2000) if is_prime(n)] == [n for n in range(2000) if sieve[n]]
    assert is_prime(2**61 - 1) and not is_prime(2**61 + 1)


@given(st.integers(1, 10**9))
def test_factorize_multiplies_back(n):
    prod = 1
    for q, k in factorize(n).items():
        assert is_prime(q)
        prod *= q**k
    assert prod == n


@pytest.mark.parametrize(
    "a, ell, s",
    [(-(2**10) * 3**6, 5, 1), (0, 7, 0), (2, 7, 1), (3, 7, -1)],
)
def test_legendre(a, ell, s):
    assert legendre(a, ell) == s


def test_legendre_needs_odd_prime():
    with pytest.raises(InputError):
        legendre(3, 2)


@pytest.mark.parametrize("p", ODD_PRIMES)
def test_sqrt_mod_all_residues(p):
    for a in range(1, p):
        if legendre(a, p) == 1:
            s = sqrt_mod(a, p)
            assert s * s % p == a


@pytest.mark.parametrize(
    "x, p, order",
    [(1, 5, 1), (2, 5, 4), (-1, 7, 2), (-1, 3, 2), (3, 11, 5), (7, 11, 10)],
)
def test_mult_order_base_field(x, p, order):
    assert mult_order(x, p) == order


def test_mult_order_rejects_zero_and_huge():
    with pytest.raises(InputError):
        mult_order(0, 5)
    with pytest.raises(ResourceLimit):
        mult_order(3, 2**89 - 1)


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_fp2_is_a_field_and_orders_divide(p):
    g = smallest_nonresidue(p)
    elems = [Fp2Element(a, b, p, g) for a in range(p) for b in range(p) if a or b]
    one = Fp2Element(1, 0, p, g)
    orders = {}
    for x in elems:
        assert x * x.inverse() == one
        k = mult_order(x)
        assert (p * p - 1) % k == 0 and x**k == one
        orders[k] = orders.get(k, 0) + 1
    # cyclic group: phi(k) elements of each order k
    for k, count in orders.items():
        assert count == sum(1 for j in range(1, k + 1) if _gcd(j, k) == 1)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


@given(st.sampled_from(ODD_PRIMES), st.integers(0, 200), st.integers(0, 200), st.integers(0, 200), st.integers(0, 200))
def test_fp2_norm_is_multiplicative(p, a, b, c, d):
    x, y = Fp2Element(a, b, p), Fp2Element(c, d, p)
    assert (x * y).norm() == x.norm() * y.norm() % p
    assert (x + y) - y == x


@pytest.mark.parametrize(
    "p, roots, n, repeated",
    [(5, {1, 2}, 4, False), (3, {2}, 2, True), (11, {3, 6}, 10, False)],
)
def test_char_poly_roots_worked_example(p, roots, n, repeated):
    cp = char_poly_roots(-2, 7, p)
    assert {cp.alpha.x0, cp.beta.x0} == roots
    assert cp.n == n and cp.repeated_root is repeated
    assert cp.delta_a == -24


@given(st.integers(-30, 30), st.sampled_from([2, 3, 5, 7, 11, 13]), st.sampled_from([3, 5, 7, 11, 13]))
def test_char_poly_roots_are_roots(a, ell, p):
    if p == ell:
        return
    cp = char_poly_roots(a, ell, p)
    for r in (cp.alpha, cp.beta):
        assert r * r - r * a + ell == 0
    assert cp.alpha + cp.beta == a and cp.alpha * cp.beta == ell


def test_cyclotomic_orders():
    assert cyclotomic_orders(2, 7).r == 3
    c = cyclotomic_orders(3, 11)
    assert (c.r, c.delta) == (5, 10)
    assert cyclotomic_orders(11, 5).r == 1
    assert [cyclotomic_orders(2, p).r for p in (3, 5, 7, 11)] == [2, 4, 3, 10]


@pytest.mark.parametrize(
    "x, ell, p, expected",
    [(1, 7, 3, True), (Fraction(7**3), 7, 3, True), (3, 11, 5, False), (Fraction(1, 7), 7, 3, False)],
)
def test_is_pth_power(x, ell, p, expected):
    assert is_pth_power_Ql(x, ell, p) is expected


@settings(max_examples=200)
@given(st.sampled_from([2, 3, 7, 11, 13, 31, 41, 61]), st.sampled_from([3, 5]), st.integers(1, 10**6), st.integers(-6, 6))
def test_is_pth_power_matches_exhaustive(ell, p, u, k):
    if ell == p or u % ell == 0:
        return
    x = Fraction(u) * Fraction(ell) ** (p * k)
    assert is_pth_power_Ql(x, ell, p) == exhaustive_pth_power(u % ell, ell, p)


@pytest.mark.parametrize("e, p, allowed", [(4, 5, {2, 3}), (3, 7, {2, 4})])
def test_primitive_root_examples(e, p, allowed):
    z = primitive_root_of_unity(e, p)
    assert z.in_base_field() and z.x0 in allowed


@pytest.mark.parametrize("e", [3, 4, 6])
@pytest.mark.parametrize("p", [5, 7, 11, 13, 17, 19])
def test_primitive_root_has_exact_order(e, p):
    if e % p == 0:
        return
    z = primitive_root_of_unity(e, p)
    assert z**e == 1
    assert all(z**k != 1 for k in range(1, e))
