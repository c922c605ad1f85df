"""Frobenius traces, residual curves, good twists at 2 and 3, and the p | b test."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .curves import CurveModel, LocalMinimalData, ResidualCurve, minimal_model_at, quadratic_twist, reduce_mod
from .divpoly import frobenius_acts_as_scalar
from .ec import CurveOverGF
from .errors import ConsistencyError, InputError, ResourceLimit
from .galois_field import FIELD_CEILING
from .modular import valuation

ENUMERATION_CEILING = 10**4
DEFAULT_SEED = 20240607


@dataclass(frozen=True)
class FrobeniusData:
    ell: int
    a: int
    N: int
    delta_a: int
    ordinary: bool


def count_points(curve: ResidualCurve, k: int = 1) -> int:
    if curve.singular:
        raise InputError("cannot count points on a singular reduction")
    if curve.ell**k > FIELD_CEILING:
        raise ResourceLimit(f"point count over F_{curve.ell}^{k} exceeds the ceiling {FIELD_CEILING}")
    N = CurveOverGF(curve.coefficients, curve.ell, k).count()
    q = curve.ell**k
    if (q + 1 - N) ** 2 > 4 * q:
        raise ConsistencyError(f"Weil bound violated: N = {N} over F_{q}")
    return N


def trace_power(a: int, ell: int, k: int) -> int:
    """Trace of Frobenius over F_{ell^k} from the trace over F_ell."""
    if k < 1:
        raise InputError("k must be positive")
    prev, cur = 2, a
    for _ in range(k - 1):
        prev, cur = cur, a * cur - ell * prev
    return cur


def frobenius_data(curve: ResidualCurve) -> FrobeniusData:
    N = count_points(curve)
    a = curve.ell + 1 - N
    return FrobeniusData(curve.ell, a, N, a * a - 4 * curve.ell, a % curve.ell != 0)


def residual_rescaled_curve(data: LocalMinimalData, e: int) -> ResidualCurve:
    """Reduction of y^2 = x^3 - c4/(48 u^4) x - c6/(864 u^6), u = ell^(v(Delta)/12), ell >= 5."""
    ell = data.ell
    if ell < 5:
        raise InputError("the rescaled residual curve is only used for ell >= 5")
    if e not in (2, 3, 4, 6) or (data.vD * e) % 12:
        raise InputError(f"v(Delta) = {data.vD} is inconsistent with e = {e}")
    vD = data.vD
    if 3 * data.vc4 > vD:
        A = 0
    else:
        if 3 * data.vc4 != vD:
            raise ConsistencyError("v(c4) < v(Delta)/3 in the potentially good case")
        A = -data.u_c4 * pow(48, -1, ell) % ell
    if 2 * data.vc6 > vD:
        B = 0
    else:
        if 2 * data.vc6 != vD:
            raise ConsistencyError("v(c6) < v(Delta)/2 in the potentially good case")
        B = -data.u_c6 * pow(864, -1, ell) % ell
    curve = ResidualCurve(ell, 0, 0, 0, A, B)
    if curve.singular:
        raise ConsistencyError(f"residual curve y^2 = x^3 + {A}x + {B} over F_{ell} is singular")
    return curve


@dataclass(frozen=True)
class GoodTwist:
    u: int
    model: CurveModel
    local: LocalMinimalData


def twist_parameter(data: LocalMinimalData) -> int:
    v4, v6, vD = data.triple
    c6u = data.u_c6 % 4
    if v6 == 6 and vD == 6 and v4 >= 6:
        return 2 if c6u == 1 else -2
    if (v4, v6, vD) == (4, 6, 12) or (v4 >= 8 and v6 == 9 and vD == 12):
        return -1
    if (v4, v6, vD) == (6, 9, 18):
        return 2 if c6u == 3 else -2
    raise ConsistencyError(f"triple {data.triple} at 2 has no good quadratic twist rule")


def good_twist_at_small_ell(data: LocalMinimalData) -> GoodTwist:
    if data.ell == 3:
        u = 3
    elif data.ell == 2:
        u = twist_parameter(data)
    else:
        raise InputError("good_twist_at_small_ell is for ell in {2, 3}")
    twisted = quadratic_twist(data.minimal_model, u)
    local = minimal_model_at(twisted, data.ell)
    if local.vD != 0:
        raise ConsistencyError(f"twist by {u} at {data.ell} does not have good reduction (v(Delta) = {local.vD})")
    return GoodTwist(u, twisted, local)


# -------------------------------------------------------------------------
# p | b


def _full_p_torsion_by_enumeration(curve: ResidualCurve, n: int, p: int) -> bool:
    E = CurveOverGF(curve.coefficients, curve.ell, n)
    xs, ys = E.points()
    Q = E.multiply((xs, ys, np.zeros(len(xs), dtype=bool)), p)
    return int(Q[2].sum()) + 1 == p * p


def _full_p_torsion_by_sampling(curve: ResidualCurve, n: int, p: int, N: int, seed: int, budget: int):
    """True when two independent points of order p turn up, None when the budget runs out."""
    E = CurveOverGF(curve.coefficients, curve.ell, n)
    rng = np.random.default_rng(seed)
    k = valuation(N, p)
    cofactor = N // p**k
    multiples = None
    batch = 32
    for _ in range(max(1, budget // batch)):
        P = E.multiply(E.random_points(rng, batch), cofactor)
        # push every point down to order exactly p inside the p-Sylow subgroup
        for _ in range(k - 1):
            Q = E.multiply(P, p)
            keep = ~Q[2]
            P = tuple(np.where(keep, q, old) for q, old in zip(Q, P))
        xs, ys = P[0][~P[2]], P[1][~P[2]]
        if len(xs) == 0:
            continue
        if multiples is None:
            first = (xs[:1], ys[:1], np.zeros(1, dtype=bool))
            cur, seen = first, set()
            for _ in range(p - 1):
                seen.add((int(cur[0][0]), int(cur[1][0])))
                cur = E.add(cur, first)
            multiples = seen
        for pt in zip(xs.tolist(), ys.tolist()):
            if pt not in multiples:
                return True
    return None


def b_index_divisible(
    curve: ResidualCurve,
    fd: FrobeniusData,
    p: int,
    n: int,
    alpha: int,
    method: str = "auto",
    seed: int = DEFAULT_SEED,
    budget: int = 200,
) -> bool:
    """Whether p divides b = [End : Z[pi]] for the repeated-root case.

    alpha is the repeated root of X^2 - aX + ell mod p, as an integer.  The answer
    is true iff Frobenius acts on E[p] as the scalar alpha, iff all of E[p] is
    rational over F_{ell^n}.
    """
    ell = fd.ell
    if fd.delta_a % p:
        raise InputError("p | b is only consulted when Delta_a = 0 mod p")
    if not fd.ordinary:
        raise ConsistencyError(f"repeated root mod {p} with a supersingular trace a = {fd.a} at ell = {ell}")
    # p^2 divides Delta_a = b^2 (disc of End) when p | b
    if fd.delta_a % (p * p):
        return False
    q = ell**n
    N = q + 1 - trace_power(fd.a, ell, n)
    if (q - 1) % p or N % (p * p):
        return False
    if method == "auto":
        method = "enumeration" if q <= ENUMERATION_CEILING else "divpoly"
    if method == "enumeration":
        if q > FIELD_CEILING:
            raise ResourceLimit(f"enumeration over F_{q} exceeds the ceiling")
        return _full_p_torsion_by_enumeration(curve, n, p)
    if method == "divpoly":
        return frobenius_acts_as_scalar(curve.coefficients, ell, p, alpha)
    if method == "sampling":
        if q > FIELD_CEILING:
            raise ResourceLimit(f"sampling over F_{q} exceeds the field ceiling")
        found = _full_p_torsion_by_sampling(curve, n, p, N, seed, budget)
        if found is not None:
            return found
        if q <= ENUMERATION_CEILING:
            return _full_p_torsion_by_enumeration(curve, n, p)
        return frobenius_acts_as_scalar(curve.coefficients, ell, p, alpha)
    raise InputError(f"unknown method {method!r}")

