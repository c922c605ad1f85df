"""Brute-force recomputations used to cross-check the formula-driven engine."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .curves import ResidualCurve
from .ec import CurveOverGF
from .errors import ConsistencyError, InputError, ResourceLimit
from .modular import cyclotomic_orders

ORACLE_FIELD_CEILING = 10**4


@dataclass(frozen=True)
class MatrixModP:
    a: int
    b: int
    c: int
    d: int
    p: int

    def __post_init__(self):
        for name in "abcd":
            object.__setattr__(self, name, getattr(self, name) % self.p)

    def __matmul__(self, o: MatrixModP) -> MatrixModP:
        return MatrixModP(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
            self.p,
        )

    def det(self) -> int:
        return (self.a * self.d - self.b * self.c) % self.p

    def is_identity(self) -> bool:
        return (self.a, self.b, self.c, self.d) == (1, 0, 0, 1)


def matrix_order(m: MatrixModP) -> int:
    if m.det() == 0:
        raise InputError("singular matrix has no order")
    p = m.p
    bound = p * (p - 1) ** 2 * (p + 1)
    cur = m
    for k in range(1, bound + 1):
        if cur.is_identity():
            return k
        cur = cur @ m
    raise AssertionError("order exceeds #GL2(F_p)")


def companion_frobenius_order(a: int, ell: int, p: int) -> int:
    """Order of the companion matrix of X^2 - aX + ell in GL2(F_p)."""
    if p < 3 or p == ell:
        raise InputError("need an odd prime p different from ell")
    return matrix_order(MatrixModP(0, -ell, 1, a, p))


def exhaustive_pth_power(u: int, ell: int, p: int) -> bool:
    if u % ell == 0:
        raise InputError("u must be a unit mod ell")
    return any(pow(x, p, ell) == u % ell for x in range(1, ell))


def _divisors(n: int):
    return [d for d in range(1, n + 1) if n % d == 0]


def exhaustive_group_structure(curve: ResidualCurve, k: int = 1) -> tuple[int, int]:
    """(m, k) with E(F_q) = Z/m x Z/mk, by counting d-torsion points."""
    q = curve.ell**k
    if q > ORACLE_FIELD_CEILING:
        raise ResourceLimit(f"exhaustive group structure is limited to q <= {ORACLE_FIELD_CEILING}")
    if curve.singular:
        raise InputError("curve is singular")
    E = CurveOverGF(curve.coefficients, curve.ell, k)
    xs, ys = E.points()
    N = len(xs) + 1
    P = (xs, ys, np.zeros(len(xs), dtype=bool))
    m = 1
    for d in _divisors(N):
        if d > 1 and N % (d * d) == 0:
            torsion = int(E.multiply(P, d)[2].sum()) + 1
            if torsion == d * d:
                m = max(m, d)
    return m, N // (m * m)


def check_consistency(result) -> list[str]:
    """Divisibility invariants every DegreeResult must satisfy."""
    bad = []
    d, p, ell = result.d, result.p, result.ell
    inter = result.intermediates
    if not isinstance(d, int) or d < 1:
        return [f"d = {d!r} is not a positive integer"]
    cyc = cyclotomic_orders(ell, p)
    if d % cyc.r:
        bad.append(f"r = {cyc.r} does not divide d = {d}")
    gl2 = p * (p - 1) ** 2 * (p + 1)
    if gl2 % d:
        bad.append(f"d = {d} does not divide #GL2(F_{p}) = {gl2}")
    kind = result.reduction.kind.value
    if kind == "AdditivePotentiallyGood" and result.reduction.e and d % result.reduction.e:
        bad.append(f"e = {result.reduction.e} does not divide d = {d}")
    if result.branch.startswith("T3") and d % 2:
        bad.append("potentially multiplicative degree must be even")
    if kind == "Good" and inter.get("a") == 0:
        if inter.get("n") != 2 * cyc.delta:
            bad.append(f"a = 0 but n = {inter.get('n')} differs from 2*delta = {2 * cyc.delta}")
        if d != 2 * cyc.delta:
            bad.append(f"a = 0 but d = {d} differs from 2*delta = {2 * cyc.delta}")
    if "r" in inter and inter["r"] != cyc.r:
        bad.append("recorded r disagrees with the order of ell mod p")
    return bad


TAME_BRANCHES = ("T1", "T4", "T5", "T6", "T7", "T9", "T11")


def verify_result(result) -> list[str]:
    """check_consistency plus an independent recomputation where one applies.

    Good reduction with distinct roots: d must equal the order of the companion
    matrix of X^2 - aX + ell in GL2(F_p).  Tame branches: d must equal the order
    of the group generated by Frobenius and inertia on E[p] (tame_image_order).
    """
    from .modular import char_poly_roots

    bad = check_consistency(result)
    inter = result.intermediates
    family = result.branch.split(".")[0]
    if result.branch == "T1.1":
        order = companion_frobenius_order(inter["a"], result.ell, result.p)
        if order != result.d:
            bad.append(f"companion matrix order {order} differs from d = {result.d}")
    if family in TAME_BRANCHES and result.branch not in ("T5.2", "T7.2") and "a" in inter:
        cp = char_poly_roots(inter["a"], result.ell, result.p)
        b_div = inter.get("b_divisible")
        if cp.repeated_root and b_div is None:
            from .frobenius import b_index_divisible, frobenius_data

            curve = ResidualCurve(result.ell, *inter["aux_curve"])
            b_div = b_index_divisible(curve, frobenius_data(curve), cp.p, cp.n, cp.alpha.x0)
        e = 1 if family == "T1" else result.reduction.e
        try:
            order = tame_image_order(cp, e, b_div)
        except ConsistencyError as exc:
            bad.append(str(exc))
        else:
            if order != result.d:
                bad.append(f"<Frobenius, inertia> has order {order}, d = {result.d}")
    return bad


def _mat_mul(A, B):
    return (
        A[0] * B[0] + A[1] * B[2],
        A[0] * B[1] + A[1] * B[3],
        A[2] * B[0] + A[3] * B[2],
        A[2] * B[1] + A[3] * B[3],
    )


def _mat_key(A):
    return tuple((x.x0, x.x1) for x in A)


def generated_group_order(gens, limit: int = 10**5) -> int:
    """Order of the subgroup of GL2(F_{p^2}) generated by 2x2 matrices (a, b, c, d) of Fp2Elements."""
    if not gens:
        return 1
    z = gens[0][0] * 0
    one = z + 1
    identity = (one, z, z, one)
    seen = {_mat_key(identity)}
    frontier = [identity]
    while frontier:
        nxt = []
        for A in frontier:
            for G in gens:
                B = _mat_mul(A, G)
                k = _mat_key(B)
                if k not in seen:
                    seen.add(k)
                    nxt.append(B)
                    if len(seen) > limit:
                        raise ResourceLimit(f"generated group exceeds {limit} elements")
        frontier = nxt
    return len(seen)


def tame_image_order(cp, e: int, b_divisible: bool | None = None) -> int:
    """|<F, Z>| where F is Frobenius on E[p] and Z generates the image of inertia.

    F is diag(alpha, beta) for distinct roots; for a repeated root it is scalar when
    p | b and a Jordan block otherwise.  Z is diag(zeta_e, zeta_e^-1), which is -I for
    e = 2 and I for e = 1.  The two commute whenever the image of inertia is tame
    and the field over which good reduction is reached is abelian over Q_ell.
    """
    from .modular import primitive_root_of_unity

    alpha, beta = cp.alpha, cp.beta
    z = alpha * 0
    if cp.repeated_root:
        if b_divisible is None:
            raise InputError("repeated root: need the p | b flag")
        F = (alpha, z, z, alpha) if b_divisible else (alpha, z + 1, z, alpha)
    else:
        F = (alpha, z, z, beta)
    if e == 1:
        return generated_group_order([F])
    zeta = primitive_root_of_unity(e, cp.p) if e > 2 else z - 1
    Z = (zeta, z, z, zeta.inverse())
    if cp.repeated_root and not b_divisible and e > 2:
        raise ConsistencyError("a non-scalar inertia element cannot commute with a Jordan block")
    return generated_group_order([F, Z])
