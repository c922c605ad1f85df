"""Small finite fields GF(ell^k) with log/exp tables.

Elements are integers 0 .. q-1 read as base-ell digit vectors (least significant
digit = constant coefficient).  Multiplication and inversion go through discrete
log tables, addition is digit-wise, so everything vectorizes with numpy.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

import numpy as np

from .errors import InputError, ResourceLimit
from .modular import factorize, is_prime

FIELD_CEILING = 10**6


def _polymod(a: list[int], m: list[int], ell: int) -> list[int]:
    # coefficient lists, lowest degree first; m monic
    a = list(a)
    dm = len(m) - 1
    while len(a) - 1 >= dm and any(a):
        if a[-1] == 0:
            a.pop()
            continue
        c = a[-1]
        shift = len(a) - 1 - dm
        for i in range(dm + 1):
            a[shift + i] = (a[shift + i] - c * m[i]) % ell
        a.pop()
    while a and a[-1] == 0:
        a.pop()
    return a


def _polymulmod(a, b, m, ell):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % ell
    return _polymod(out, m, ell)


def _polysub(a, b, ell):
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % ell for i in range(n)]
    while out and out[-1] == 0:
        out.pop()
    return out


def _polygcd(a, b, ell):
    while b:
        inv = pow(b[-1], -1, ell)
        b = [c * inv % ell for c in b]
        a, b = b, _polymod(a, b, ell)
    return a


def _xpow(e: int, m, ell):
    result, base = [1], [0, 1]
    while e:
        if e & 1:
            result = _polymulmod(result, base, m, ell)
        base = _polymulmod(base, base, m, ell)
        e >>= 1
    return result


def is_irreducible(m: list[int], ell: int) -> bool:
    """Rabin's test for a monic polynomial over F_ell."""
    k = len(m) - 1
    if _polysub(_xpow(ell**k, m, ell), [0, 1], ell):
        return False
    for q in factorize(k):
        h = _polysub(_xpow(ell ** (k // q), m, ell), [0, 1], ell)
        if len(_polygcd(m, h, ell)) > 1:
            return False
    return True


@lru_cache(maxsize=None)
def irreducible_modulus(ell: int, k: int) -> tuple[int, ...]:
    """First monic irreducible of degree k in lexicographic scan."""
    if k == 1:
        return (0, 1)
    for tail in product(range(ell), repeat=k):
        m = list(tail[::-1]) + [1]
        if m[0] and is_irreducible(m, ell):
            return tuple(m)
    raise AssertionError("irreducible polynomials exist in every degree")


class GF:
    """The field with q = ell^k elements, k >= 1."""

    def __init__(self, ell: int, k: int = 1):
        if not is_prime(ell) or k < 1:
            raise InputError(f"GF needs a prime and positive degree, got ({ell}, {k})")
        q = ell**k
        if q > FIELD_CEILING:
            raise ResourceLimit(f"field size {ell}^{k} exceeds the ceiling {FIELD_CEILING}")
        self.ell, self.k, self.q = ell, k, q
        self.modulus = irreducible_modulus(ell, k)
        self.powers = np.array([ell**i for i in range(k)], dtype=np.int64)
        self._build_tables()

    def __repr__(self):
        return f"GF({self.ell}^{self.k})"

    # digits <-> ints
    def digits(self, x):
        x = np.asarray(x, dtype=np.int64)
        return (x[..., None] // self.powers) % self.ell

    def undigits(self, d):
        return (np.asarray(d, dtype=np.int64) % self.ell) @ self.powers

    def _mul_by_t_matrix(self):
        # column j is t * t^j reduced
        ell, k, m = self.ell, self.k, self.modulus
        M = np.zeros((k, k), dtype=np.int64)
        for j in range(k - 1):
            M[j + 1, j] = 1
        for i in range(k):
            M[i, k - 1] = (-m[i]) % ell
        return M

    def _build_tables(self):
        ell, k, q = self.ell, self.k, self.q
        order = q - 1
        primes = list(factorize(order)) if order > 1 else []
        one = np.eye(k, dtype=np.int64)
        for g in range(1, q):
            gmat = self._element_matrix(g)
            if all(not np.array_equal(self._matpow(gmat, order // r), one) for r in primes):
                break
        else:
            raise AssertionError("multiplicative group is cyclic")
        exp = self._power_table(gmat, order)
        self.generator = int(g)
        self.exp = np.concatenate([exp, exp]).astype(np.int64)  # length 2(q-1)
        self.log = np.full(q, -1, dtype=np.int64)
        self.log[exp] = np.arange(order, dtype=np.int64)
        if (self.log[1:] < 0).any():
            raise AssertionError("generator check failed")
        self._build_additive_tables()

    def _build_additive_tables(self):
        # Zech logarithms: g^zech[n] = 1 + g^n (zech = -1 when 1 + g^n = 0)
        ell, order = self.ell, self.q - 1
        x = self.exp[:order]
        low = x % ell
        one_plus = x - low + (low + 1) % ell
        self.zech = self.log[one_plus]
        z = np.arange(self.q, dtype=np.int64)
        neg = np.zeros(self.q, dtype=np.int64)
        for p in self.powers:
            neg += ((-(z // p)) % ell) * p
        self.neg_table = neg

    def _element_matrix(self, x: int):
        T = self._mul_by_t_matrix()
        d = self.digits(x)
        M = np.zeros((self.k, self.k), dtype=np.int64)
        P = np.eye(self.k, dtype=np.int64)
        for c in d:
            M = (M + c * P) % self.ell
            P = (T @ P) % self.ell
        return M

    def _matpow(self, M, e: int):
        out = np.eye(self.k, dtype=np.int64)
        while e:
            if e & 1:
                out = (out @ M) % self.ell
            M = (M @ M) % self.ell
            e >>= 1
        return out

    def _power_table(self, gmat, count: int):
        """g^0 .. g^(count-1) as ints; stops early if a power returns to 1."""
        ell, k = self.ell, self.k
        vecs = np.zeros((1, k), dtype=np.int64)
        vecs[0, 0] = 1
        step = gmat.copy()
        while len(vecs) < count:
            nxt = (vecs @ step.T) % ell
            vecs = np.concatenate([vecs, nxt])
            step = (step @ step) % ell
        vecs = vecs[:count]
        ints = vecs @ self.powers
        hits = np.nonzero(ints[1:] == 1)[0]
        if len(hits):
            return ints[: hits[0] + 1]
        return ints

    # arithmetic on ints or numpy arrays of ints
    def add(self, a, b):
        if self.k == 1:
            return (np.asarray(a) + b) % self.ell
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        la, lb = self.log[a], self.log[b]
        # a + b = a (1 + b/a)
        z = self.zech[(lb - la) % (self.q - 1)]
        out = np.where(z < 0, 0, self.exp[np.maximum(la, 0) + np.maximum(z, 0)])
        return np.where(a == 0, b, np.where(b == 0, a, out))

    def neg(self, a):
        if self.k == 1:
            return (-np.asarray(a)) % self.ell
        return self.neg_table[np.asarray(a, dtype=np.int64)]

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.k == 1:
            return a * b % self.ell
        la, lb = self.log[a], self.log[b]
        out = self.exp[np.where(la < 0, 0, la) + np.where(lb < 0, 0, lb)]
        return np.where((a == 0) | (b == 0), 0, out)

    def inv(self, a):
        a = np.asarray(a, dtype=np.int64)
        if (a == 0).any():
            raise ZeroDivisionError("zero has no inverse")
        return self.exp[(self.q - 1 - self.log[a]) % (self.q - 1)]

    def power(self, a, e: int):
        a = np.asarray(a, dtype=np.int64)
        la = self.log[a]
        out = self.exp[(np.where(la < 0, 0, la) * (e % (self.q - 1) if self.q > 1 else 0)) % (self.q - 1)]
        if e == 0:
            return np.ones_like(a)
        return np.where(a == 0, 0, out)

    def embed(self, c: int) -> int:
        """Image of an integer under Z -> F_ell -> F_q."""
        return int(c % self.ell)

    def elements(self):
        return np.arange(self.q, dtype=np.int64)

    def is_square(self, a):
        """Boolean array: a is a nonzero square (odd characteristic)."""
        la = self.log[np.asarray(a, dtype=np.int64)]
        return (la >= 0) & (la % 2 == 0)

    def half_trace_image(self):
        """Set membership mask for {z^2 + z}, characteristic 2."""
        z = self.elements()
        mask = np.zeros(self.q, dtype=bool)
        mask[self.add(self.mul(z, z), z)] = True
        return mask


@lru_cache(maxsize=64)
def field(ell: int, k: int = 1) -> GF:
    return GF(ell, k)
