"""Arithmetic in F_p and F_{p^2}, multiplicative orders, and p-th powers in Q_ell."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd, inf

from .errors import InputError, ResourceLimit

MAX_ORDER_MODULUS = 2**63 - 1


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of a positive integer by trial division."""
    if n < 1:
        raise ValueError("factorize needs a positive integer")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for q in small:
        if n % q == 0:
            return n == q
    # deterministic Miller-Rabin for n < 3.3e24
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def valuation(x, ell: int):
    """ell-adic valuation of a nonzero rational; ``math.inf`` for zero."""
    x = Fraction(x)
    if x == 0:
        return inf
    v = 0
    num, den = x.numerator, x.denominator
    while num % ell == 0:
        num //= ell
        v += 1
    while den % ell == 0:
        den //= ell
        v -= 1
    return v


def unit_part(x, ell: int) -> Fraction:
    """x / ell^v(x) for nonzero rational x."""
    x = Fraction(x)
    v = valuation(x, ell)
    if v == inf:
        raise InputError("unit part of zero is undefined")
    return x / Fraction(ell) ** v


def residue(x, modulus: int) -> int:
    """Reduce a rational whose denominator is prime to the modulus."""
    x = Fraction(x)
    return x.numerator * pow(x.denominator, -1, modulus) % modulus


def legendre(a: int, ell: int) -> int:
    if ell == 2:
        raise InputError("Legendre symbol needs an odd prime; use the c6 mod 8 test at 2")
    a %= ell
    if a == 0:
        return 0
    return 1 if pow(a, (ell - 1) // 2, ell) == 1 else -1


def sqrt_mod(a: int, p: int) -> int:
    """A square root of a quadratic residue modulo an odd prime (Tonelli-Shanks)."""
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        raise ValueError(f"{a} is not a square mod {p}")
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c, t, r = i, b * b % p, t * b * b % p, r * b % p
    return r


@lru_cache(maxsize=None)
def smallest_nonresidue(p: int) -> int:
    g = 2
    while legendre(g, p) != -1:
        g += 1
    return g


@dataclass(frozen=True)
class Fp2Element:
    """x0 + x1*t in F_p[t]/(t^2 - g) with g the smallest non-residue mod p."""

    x0: int
    x1: int
    p: int
    g: int = field(default=0, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "x0", self.x0 % self.p)
        object.__setattr__(self, "x1", self.x1 % self.p)
        if not self.g:
            object.__setattr__(self, "g", smallest_nonresidue(self.p))

    @classmethod
    def of(cls, value, p: int, g: int | None = None) -> Fp2Element:
        if isinstance(value, Fp2Element):
            return value
        return cls(value, 0, p, g or 0)

    def _coerce(self, other) -> Fp2Element:
        return other if isinstance(other, Fp2Element) else Fp2Element(other, 0, self.p, self.g)

    def __add__(self, other):
        o = self._coerce(other)
        return Fp2Element(self.x0 + o.x0, self.x1 + o.x1, self.p, self.g)

    __radd__ = __add__

    def __neg__(self):
        return Fp2Element(-self.x0, -self.x1, self.p, self.g)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        p = self.p
        return Fp2Element(
            (self.x0 * o.x0 + self.g * self.x1 * o.x1) % p,
            (self.x0 * o.x1 + self.x1 * o.x0) % p,
            p,
            self.g,
        )

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = Fp2Element(1, 0, self.p, self.g)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def norm(self) -> int:
        return (self.x0 * self.x0 - self.g * self.x1 * self.x1) % self.p

    def conjugate(self) -> Fp2Element:
        return Fp2Element(self.x0, -self.x1, self.p, self.g)

    def inverse(self) -> Fp2Element:
        nm = self.norm()
        if nm == 0:
            raise ZeroDivisionError("zero has no inverse in F_p^2")
        inv = pow(nm, -1, self.p)
        c = self.conjugate()
        return Fp2Element(c.x0 * inv, c.x1 * inv, self.p, self.g)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __eq__(self, other):
        if isinstance(other, int):
            return self.x1 == 0 and self.x0 == other % self.p
        if isinstance(other, Fp2Element):
            return (self.x0, self.x1, self.p) == (other.x0, other.x1, other.p)
        return NotImplemented

    def __hash__(self):
        return hash((self.x0, self.x1, self.p))

    def is_zero(self) -> bool:
        return self.x0 == 0 and self.x1 == 0

    def in_base_field(self) -> bool:
        return self.x1 == 0

    def __str__(self):
        if self.x1 == 0:
            return str(self.x0)
        return f"{self.x0}+{self.x1}t"


def mult_order(x, p: int | None = None) -> int:
    """Multiplicative order of a nonzero element of F_p (int plus ``p``) or F_{p^2}."""
    if isinstance(x, Fp2Element):
        p = x.p
        if x.is_zero():
            raise InputError("zero has no multiplicative order")
        if x.in_base_field():
            return mult_order(x.x0, p)
        group = p * p - 1
        one = Fp2Element(1, 0, p, x.g)
        power = lambda k: x**k  # noqa: E731
    else:
        if p is None:
            raise TypeError("an integer element needs its prime modulus")
        x %= p
        if x == 0:
            raise InputError("zero has no multiplicative order")
        group = p - 1
        one = 1
        power = lambda k: pow(x, k, p)  # noqa: E731
    if p > MAX_ORDER_MODULUS:
        raise ResourceLimit(f"order computations are limited to p <= 2^63 - 1, got {p}")
    order = group
    for q in factorize(group):
        while order % q == 0 and power(order // q) == one:
            order //= q
    return order


@dataclass(frozen=True)
class CharPolyData:
    """Roots and orders attached to X^2 - a X + ell over F_p."""

    a: int
    ell: int
    p: int
    alpha: Fp2Element
    beta: Fp2Element
    n: int
    delta_a: int
    repeated_root: bool

    @property
    def split(self) -> bool:
        return self.alpha.in_base_field()


def char_poly_roots(a: int, ell: int, p: int) -> CharPolyData:
    if p < 3 or p == ell:
        raise InputError("need an odd prime p different from ell")
    delta = a * a - 4 * ell
    g = smallest_nonresidue(p)
    half = pow(2, -1, p)
    d = delta % p
    if d == 0:
        alpha = beta = Fp2Element(a * half, 0, p, g)
    elif legendre(d, p) == 1:
        s = sqrt_mod(d, p)
        alpha = Fp2Element((a + s) * half, 0, p, g)
        beta = Fp2Element((a - s) * half, 0, p, g)
    else:
        s = sqrt_mod(d * pow(g, -1, p), p)
        alpha = Fp2Element(a * half, s * half, p, g)
        beta = alpha.conjugate()
    n = lcm(mult_order(alpha), mult_order(beta))
    return CharPolyData(a, ell, p, alpha, beta, n, delta, d == 0)


@dataclass(frozen=True)
class CyclotomicData:
    ell: int
    p: int
    r: int
    delta: int


def cyclotomic_orders(ell: int, p: int) -> CyclotomicData:
    """r = order of ell mod p, delta = order of -ell mod p."""
    if p < 3 or ell % p == 0:
        raise InputError("need an odd prime p not dividing ell")
    return CyclotomicData(ell, p, mult_order(ell, p), mult_order(-ell, p))


def is_pth_power_Ql(x, ell: int, p: int) -> bool:
    """Whether a nonzero rational is a p-th power in Q_ell (ell != p, p odd)."""
    x = Fraction(x)
    if x == 0:
        raise InputError("zero is excluded from the p-th power test")
    v = valuation(x, ell)
    if v % p:
        return False
    if ell % p != 1:
        return True
    u = residue(unit_part(x, ell), ell)
    return pow(u, (ell - 1) // p, ell) == 1


def primitive_root_of_unity(e: int, p: int) -> Fp2Element:
    """First element of exact order e, scanning F_p before F_{p^2}."""
    if e % p == 0:
        raise InputError(f"no primitive {e}-th root of unity in characteristic {p}")
    g = smallest_nonresidue(p)
    if (p - 1) % e == 0:
        for z in range(2, p):
            w = Fp2Element(pow(z, (p - 1) // e, p), 0, p, g)
            if mult_order(w) == e:
                return w
    if (p * p - 1) % e:
        raise InputError(f"{e} does not divide p^2 - 1 for p = {p}")
    for x1 in range(1, p):
        for x0 in range(p):
            w = Fp2Element(x0, x1, p, g) ** ((p * p - 1) // e)
            if not w.is_zero() and mult_order(w) == e:
                return w
    raise AssertionError("unreachable: F_p^2 has elements of every order dividing p^2 - 1")
