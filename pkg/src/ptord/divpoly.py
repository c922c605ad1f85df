"""Division polynomials over F_ell and the Frobenius-is-scalar test on E[p].

Polynomials are lists of ints mod ell, lowest degree first.  Products use
Kronecker substitution into Python big integers, which is far quicker than a
schoolbook loop once degrees reach the hundreds.
"""

from __future__ import annotations


def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def pmul(a, b, ell):
    if not a or not b:
        return []
    bits = (2 * ell.bit_length()) + min(len(a), len(b)).bit_length() + 1
    A = int.from_bytes(b"".join(c.to_bytes((bits + 7) // 8, "little") for c in a), "little")
    B = int.from_bytes(b"".join(c.to_bytes((bits + 7) // 8, "little") for c in b), "little")
    width = (bits + 7) // 8
    raw = (A * B).to_bytes(width * (len(a) + len(b)), "little")
    out = [int.from_bytes(raw[i * width:(i + 1) * width], "little") % ell for i in range(len(a) + len(b) - 1)]
    return _trim(out)


def padd(a, b, ell):
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % ell for i in range(n)])


def psub(a, b, ell):
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % ell for i in range(n)])


def pscale(a, c, ell):
    return _trim([x * c % ell for x in a])


def pmod(a, m, ell):
    a = list(a)
    dm = len(m) - 1
    inv = pow(m[-1], -1, ell)
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] * inv % ell
        if c:
            base = i - dm
            for j in range(dm + 1):
                a[base + j] = (a[base + j] - c * m[j]) % ell
    return _trim(a[:dm] if len(a) > dm else a)


def pmulmod(a, b, m, ell):
    return pmod(pmul(a, b, ell), m, ell)


def ppowmod(a, e, m, ell):
    result = [1]
    base = pmod(a, m, ell)
    while e:
        if e & 1:
            result = pmulmod(result, base, m, ell)
        base = pmulmod(base, base, m, ell)
        e >>= 1
    return result


def _b_invariants(a1, a2, a3, a4, a6):
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
    return b2, b4, b6, b8


class DivisionPolynomials:
    """f_n with psi_n = f_n (n odd) or (2y + a1 x + a3) f_n (n even), reduced mod ell."""

    def __init__(self, coeffs, ell: int):
        self.ell = ell
        b2, b4, b6, b8 = (c % ell for c in _b_invariants(*coeffs))
        L = ell
        self.F = _trim([b6 % L, 2 * b4 % L, b2 % L, 4 % L])
        self.F2 = pmul(self.F, self.F, L)
        self._f = {
            0: [],
            1: [1],
            2: [1],
            3: _trim([b8, 3 * b6 % L, 3 * b4 % L, b2, 3 % L]),
            4: _trim(
                [
                    (b4 * b8 - b6 * b6) % L,
                    (b2 * b8 - b4 * b6) % L,
                    10 * b8 % L,
                    10 * b6 % L,
                    5 * b4 % L,
                    b2,
                    2 % L,
                ]
            ),
        }

    def f(self, n: int):
        if n < 0:
            return pscale(self.f(-n), -1, self.ell)
        if n in self._f:
            return self._f[n]
        L = self.ell
        m = n // 2
        if n % 2:
            t1 = pmul(self.f(m + 2), pmul(self.f(m), pmul(self.f(m), self.f(m), L), L), L)
            t2 = pmul(self.f(m - 1), pmul(self.f(m + 1), pmul(self.f(m + 1), self.f(m + 1), L), L), L)
            if m % 2 == 0:
                val = psub(pmul(self.F2, t1, L), t2, L)
            else:
                val = psub(t1, pmul(self.F2, t2, L), L)
        else:
            t1 = pmul(self.f(m + 2), pmul(self.f(m - 1), self.f(m - 1), L), L)
            t2 = pmul(self.f(m - 2), pmul(self.f(m + 1), self.f(m + 1), L), L)
            val = pmul(self.f(m), psub(t1, t2, L), L)
        self._f[n] = val
        return val

    def psi_squared(self, n: int):
        fn2 = pmul(self.f(n), self.f(n), self.ell)
        return fn2 if n % 2 else pmul(self.F, fn2, self.ell)

    def phi(self, n: int):
        """Numerator of x([n]P) = phi_n / psi_n^2."""
        L = self.ell
        x = [0, 1]
        fn2 = pmul(self.f(n), self.f(n), L)
        cross = pmul(self.f(n + 1), self.f(n - 1), L)
        if n % 2:
            return psub(pmul(x, fn2, L), pmul(self.F, cross, L), L)
        return psub(pmul(x, pmul(self.F, fn2, L), L), cross, L)


def frobenius_acts_as_scalar(coeffs, ell: int, p: int, alpha: int) -> bool:
    """Does x^ell = x([alpha]P) hold for every nonzero P in E[p] (p odd, p != ell)?

    Equivalently psi_p divides x^ell * psi_alpha^2 - phi_alpha over F_ell.
    """
    alpha %= p
    if alpha == 0:
        raise ValueError("alpha must be a unit mod p")
    dp = DivisionPolynomials(coeffs, ell)
    m = dp.f(p)
    xl = ppowmod([0, 1], ell, m, ell)
    lhs = pmulmod(xl, pmod(dp.psi_squared(alpha), m, ell), m, ell)
    rhs = pmod(dp.phi(alpha), m, ell)
    return psub(lhs, rhs, ell) == []
