"""Elliptic curves over GF(q): point enumeration and a vectorized group law.

Points are held as parallel numpy arrays (x, y, inf) so that one call adds or
multiplies many points at once.  ``inf`` marks the point at infinity; its x and y
entries are ignored.
"""

from __future__ import annotations

import numpy as np

from .galois_field import GF, field


class CurveOverGF:
    def __init__(self, coeffs, ell: int, k: int = 1):
        self.F: GF = field(ell, k)
        self.ell, self.k, self.q = ell, k, self.F.q
        self.a1, self.a2, self.a3, self.a4, self.a6 = (self.F.embed(c) for c in coeffs)
        self._sqrt = None
        self._as_root = None

    # helpers ---------------------------------------------------------------
    def c(self, n: int) -> int:
        return self.F.embed(n)

    def lhs_terms(self, x):
        """A(x) = a1 x + a3 and R(x) = x^3 + a2 x^2 + a4 x + a6, so y^2 + A y = R."""
        F = self.F
        x = np.asarray(x, dtype=np.int64)
        A = F.add(F.mul(self.a1, x), self.a3)
        x2 = F.mul(x, x)
        R = F.add(F.add(F.mul(x2, x), F.mul(self.a2, x2)), F.add(F.mul(self.a4, x), self.a6))
        return A, R

    def _sqrt_table(self):
        if self._sqrt is None:
            F = self.F
            z = F.elements()
            table = np.full(F.q, -1, dtype=np.int64)
            table[F.mul(z, z)] = z
            self._sqrt = table
        return self._sqrt

    def _artin_schreier_table(self):
        # root[v] = some z with z^2 + z = v, or -1
        if self._as_root is None:
            F = self.F
            z = F.elements()
            table = np.full(F.q, -1, dtype=np.int64)
            table[F.add(F.mul(z, z), z)] = z
            self._as_root = table
        return self._as_root

    def count(self) -> int:
        """Number of points over GF(q), infinity included."""
        F = self.F
        x = F.elements()
        A, R = self.lhs_terms(x)
        if self.ell == 2:
            zero = A == 0
            nz = ~zero
            Anz = A[nz]
            ratio = F.mul(R[nz], F.inv(F.mul(Anz, Anz))) if nz.any() else np.zeros(0, dtype=np.int64)
            solvable = self._artin_schreier_table()[ratio] >= 0
            return 1 + int(zero.sum()) + 2 * int(solvable.sum())
        # (2y + A)^2 = A^2 + 4R
        D = F.add(F.mul(A, A), F.mul(self.c(4), R))
        chi = np.where(D == 0, 0, np.where(F.is_square(D), 1, -1))
        return 1 + self.q + int(chi.sum())

    def points(self):
        """All affine points as arrays (x, y)."""
        F = self.F
        x = F.elements()
        A, R = self.lhs_terms(x)
        xs, ys = [], []
        if self.ell == 2:
            zero = A == 0
            if zero.any():
                # y^2 = R has the unique root R^(q/2)
                xs.append(x[zero])
                ys.append(F.power(R[zero], self.q // 2))
            nz = ~zero
            if nz.any():
                Anz = A[nz]
                ratio = F.mul(R[nz], F.inv(F.mul(Anz, Anz)))
                z = self._artin_schreier_table()[ratio]
                ok = z >= 0
                for zz in (z[ok], F.add(z[ok], 1)):
                    xs.append(x[nz][ok])
                    ys.append(F.mul(Anz[ok], zz))
        else:
            D = F.add(F.mul(A, A), F.mul(self.c(4), R))
            s = self._sqrt_table()[D]
            ok = s >= 0
            half = F.inv(np.int64(self.c(2)))
            for sign_s in (s[ok], F.neg(s[ok])):
                xs.append(x[ok])
                ys.append(F.mul(F.sub(sign_s, A[ok]), half))
            # D == 0 produced the same point twice
            xs_all = np.concatenate(xs)
            ys_all = np.concatenate(ys)
            pts = np.unique(xs_all * self.q + ys_all)
            return pts // self.q, pts % self.q
        return np.concatenate(xs), np.concatenate(ys)

    # group law -------------------------------------------------------------
    def add(self, P, Q):
        F = self.F
        x1, y1, i1 = P
        x2, y2, i2 = Q
        x1, y1, x2, y2 = (np.asarray(v, dtype=np.int64) for v in (x1, y1, x2, y2))
        i1, i2 = np.asarray(i1, dtype=bool), np.asarray(i2, dtype=bool)
        a1, a2, a3, a4, a6 = self.a1, self.a2, self.a3, self.a4, self.a6
        same_x = x1 == x2
        opposite = same_x & (F.add(F.add(y1, y2), F.add(F.mul(a1, x2), a3)) == 0)
        # chord
        dx = F.sub(x2, x1)
        dx_safe = np.where(dx == 0, 1, dx)
        inv_dx = F.inv(dx_safe)
        lam_c = F.mul(F.sub(y2, y1), inv_dx)
        nu_c = F.mul(F.sub(F.mul(y1, x2), F.mul(y2, x1)), inv_dx)
        # tangent
        den = F.add(F.add(F.mul(self.c(2), y1), F.mul(a1, x1)), a3)
        den_safe = np.where(den == 0, 1, den)
        inv_den = F.inv(den_safe)
        x1sq = F.mul(x1, x1)
        num_l = F.sub(F.add(F.add(F.mul(self.c(3), x1sq), F.mul(F.mul(self.c(2), a2), x1)), a4), F.mul(a1, y1))
        num_n = F.sub(
            F.add(F.add(F.neg(F.mul(x1sq, x1)), F.mul(a4, x1)), F.mul(self.c(2), a6)), F.mul(a3, y1)
        )
        lam = np.where(same_x, F.mul(num_l, inv_den), lam_c)
        nu = np.where(same_x, F.mul(num_n, inv_den), nu_c)
        x3 = F.sub(F.sub(F.sub(F.add(F.mul(lam, lam), F.mul(a1, lam)), a2), x1), x2)
        y3 = F.sub(F.sub(F.neg(F.mul(F.add(lam, a1), x3)), nu), a3)
        inf3 = opposite & ~i1 & ~i2
        # one operand at infinity
        x3 = np.where(i1, x2, np.where(i2, x1, x3))
        y3 = np.where(i1, y2, np.where(i2, y1, y3))
        inf3 = np.where(i1, i2, np.where(i2, i1, inf3))
        return x3, y3, inf3

    def neg(self, P):
        F = self.F
        x, y, i = P
        return x, F.sub(F.neg(y), F.add(F.mul(self.a1, x), self.a3)), i

    def multiply(self, P, n: int):
        x, y, i = P
        x = np.asarray(x, dtype=np.int64)
        shape = x.shape
        if n < 0:
            return self.multiply(self.neg(P), -n)
        R = (np.zeros(shape, dtype=np.int64), np.zeros(shape, dtype=np.int64), np.ones(shape, dtype=bool))
        B = (x, np.asarray(y, dtype=np.int64), np.asarray(i, dtype=bool))
        while n:
            if n & 1:
                R = self.add(R, B)
            B = self.add(B, B)
            n >>= 1
        return R

    def on_curve(self, x, y):
        F = self.F
        A, R = self.lhs_terms(x)
        y = np.asarray(y, dtype=np.int64)
        return F.add(F.mul(y, y), F.mul(A, y)) == R

    def random_points(self, rng, count: int):
        """Up to ``count`` random affine points (x uniform among x-values with a point above)."""
        F = self.F
        x = rng.integers(self.q, size=4 * count + 8).astype(np.int64)
        flip = rng.integers(2, size=x.shape).astype(bool)
        A, R = self.lhs_terms(x)
        if self.ell == 2:
            zero = A == 0
            A_safe = np.where(zero, 1, A)
            ratio = F.mul(R, F.inv(F.mul(A_safe, A_safe)))
            z = self._artin_schreier_table()[ratio]
            z = np.where(flip & (z >= 0), F.add(np.maximum(z, 0), 1), z)
            y = np.where(zero, F.power(R, self.q // 2), F.mul(A_safe, np.maximum(z, 0)))
            ok = zero | (z >= 0)
        else:
            D = F.add(F.mul(A, A), F.mul(self.c(4), R))
            s = self._sqrt_table()[D]
            ok = s >= 0
            s = np.maximum(s, 0)
            s = np.where(flip, F.neg(s), s)
            y = F.mul(F.sub(s, A), F.inv(np.int64(self.c(2))))
        xs, ys = x[ok][:count], y[ok][:count]
        return xs, ys, np.zeros(len(xs), dtype=bool)
