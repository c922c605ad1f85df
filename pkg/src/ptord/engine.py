"""The degree d = [Q_ell(E[p]) : Q_ell] by case analysis on the reduction type.

Branch labels name the rule family and the case inside it, e.g. ``T7.1.1.2``.  The
full table lives in the README.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .curves import CurveModel, LocalMinimalData, ResidualCurve, minimal_model_at, reduce_mod
from .errors import ConsistencyError, InputError
from .frobenius import (
    DEFAULT_SEED,
    FrobeniusData,
    b_index_divisible,
    frobenius_data,
    good_twist_at_small_ell,
    residual_rescaled_curve,
)
from .modular import (
    CharPolyData,
    CyclotomicData,
    Fp2Element,
    char_poly_roots,
    cyclotomic_orders,
    is_pth_power_Ql,
    is_prime,
    primitive_root_of_unity,
)
from .reduction import ReductionInfo, ReductionKind, reduction_info


@dataclass
class DegreeResult:
    ell: int
    p: int
    d: int
    branch: str
    reduction: ReductionInfo
    intermediates: dict[str, Any] = field(default_factory=dict)
    label: str | None = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "label": self.label,
            "ell": self.ell,
            "p": self.p,
            "d": self.d,
            "branch": self.branch,
            "reduction": self.reduction.to_dict(),
            "intermediates": {k: _jsonable(v) for k, v in self.intermediates.items()},
        }


def _jsonable(v):
    if isinstance(v, Fp2Element):
        return str(v)
    if isinstance(v, float):  # the infinite valuation marker
        return "inf"
    if isinstance(v, tuple):
        return list(v)
    return v


@dataclass(frozen=True)
class Options:
    defect: int | None = None
    seed: int = DEFAULT_SEED
    b_method: str = "auto"
    defect_table: Any = None
    zeta_choice: int = 1  # which primitive e-th root stands for zeta_e (1 = first found, -1 = its inverse)
    swap_roots: bool = False


def _roots(cp: CharPolyData, swap: bool):
    return (cp.beta, cp.alpha) if swap else (cp.alpha, cp.beta)


def _pair_equals(x, y, z1, z2) -> bool:
    # unordered comparison {x, y} = {z1, z2}
    return (x == z1 and y == z2) or (x == z2 and y == z1)


def _zeta(e: int, p: int, choice: int) -> Fp2Element:
    z = primitive_root_of_unity(e, p)
    return z if choice == 1 else z.inverse()


def _b_div_for(curve: ResidualCurve, fd: FrobeniusData, cp: CharPolyData, opts: Options) -> bool:
    if not cp.alpha.in_base_field():
        raise ConsistencyError("a repeated root must lie in F_p")
    return b_index_divisible(curve, fd, cp.p, cp.n, cp.alpha.x0, method=opts.b_method, seed=opts.seed)


# -------------------------------------------------------------------------
# good reduction


def degree_good(cp: CharPolyData, b_div: bool | None = None, cyc: CyclotomicData | None = None) -> tuple[int, str]:
    if not cp.repeated_root:
        d, branch = cp.n, "T1.1"
    else:
        if b_div is None:
            raise InputError("repeated root: the p | b flag is required")
        d, branch = (cp.n, "T1.2") if b_div else (cp.n * cp.p, "T1.2")
    if cp.a == 0 and cyc is not None and d != 2 * cyc.delta:
        raise ConsistencyError(f"a = 0 but d = {d} differs from 2*delta = {2 * cyc.delta}")
    return d, branch


# -------------------------------------------------------------------------
# multiplicative and potentially multiplicative


def degree_multiplicative(data: LocalMinimalData, split: bool, cyc: CyclotomicData, p: int) -> tuple[int, str]:
    ell, r = data.ell, cyc.r
    pth = is_pth_power_Ql(data.invariants.j, ell, p)
    one_mod_p = ell % p == 1
    if split:
        if not one_mod_p:
            return (r if pth else p * r), "T2.1.1"
        return (1 if pth else p), "T2.1.2"
    if r % 2 == 0:
        return (r if pth else p * r), "T2.2.1"
    if not one_mod_p:
        return (2 * r if pth else 2 * p * r), "T2.2.2.1"
    return (2 if pth else 2 * p), "T2.2.2.2"


def degree_pot_mult(data: LocalMinimalData, cyc: CyclotomicData, p: int) -> tuple[int, str]:
    pth = is_pth_power_Ql(data.invariants.j, data.ell, p)
    if data.ell % p != 1:
        return (2 * cyc.r if pth else 2 * p * cyc.r), "T3.1"
    return (2 if pth else 2 * p), "T3.2"


# -------------------------------------------------------------------------
# additive potentially good


def _half_powers_minus_one(a, b, n) -> bool:
    return n % 2 == 0 and a ** (n // 2) == -1 and b ** (n // 2) == -1


def _quadratic_twist_rule(cp: CharPolyData, b_div: bool | None, thm: str, opts: Options) -> tuple[int, str]:
    """Shared rule of families T4, T9 and T11 (e = 2, via a good quadratic twist)."""
    alpha, beta = _roots(cp, opts.swap_roots)
    n, p = cp.n, cp.p
    if not cp.repeated_root:
        return (n if _half_powers_minus_one(alpha, beta, n) else 2 * n), f"{thm}.1"
    if thm == "T9":
        if p != 11:
            raise ConsistencyError(f"repeated root at ell = 3 forces p = 11, got p = {p}")
        if 110 not in (n * p, 2 * n * p):
            raise ConsistencyError(f"n = {n} is incompatible with d = 110")
        return 110, "T9.2"
    if thm == "T11":
        if p != 7:
            raise ConsistencyError(f"repeated root at ell = 2 forces p = 7, got p = {p}")
        if 42 not in (n * p, 2 * n * p):
            raise ConsistencyError(f"n = {n} is incompatible with d = 42")
        return 42, "T11.2"
    if b_div is None:
        raise InputError("repeated root: the p | b flag is required")
    if n % 2 == 0 and alpha ** (n // 2) == -1:
        return (n if b_div else n * p), "T4.2.1"
    return (2 * n if b_div else 2 * n * p), "T4.2.2"


def _family5(cp: CharPolyData, opts: Options) -> tuple[int, str]:
    n, p = cp.n, cp.p
    if p == 3:
        return 3 * n, "T5.2"
    if cp.repeated_root:
        return 3 * n, "T5.1.2"
    alpha, beta = _roots(cp, opts.swap_roots)
    z = _zeta(3, p, opts.zeta_choice)
    if n % 3 == 0 and _pair_equals(alpha ** (n // 3), beta ** (n // 3), z, z.inverse()):
        return n, "T5.1.1"
    return 3 * n, "T5.1.1"


def _family6(cp: CharPolyData, opts: Options) -> tuple[int, str]:
    n, p = cp.n, cp.p
    alpha, beta = _roots(cp, opts.swap_roots)
    if cp.repeated_root:
        if n % 2 == 0 and alpha ** (n // 2) == -1:
            return 2 * n, "T6.2"
        return 4 * n, "T6.2"
    z = _zeta(4, p, opts.zeta_choice)
    if n % 4 == 0 and _pair_equals(alpha ** (n // 4), beta ** (n // 4), z, z.inverse()):
        return n, "T6.1"
    if n % 2 == 1 or not _half_powers_minus_one(alpha, beta, n):
        return 4 * n, "T6.1"
    return 2 * n, "T6.1"


def _family7(cp: CharPolyData, opts: Options) -> tuple[int, str]:
    n, p = cp.n, cp.p
    if p == 3:
        return 6, "T7.2"
    alpha, beta = _roots(cp, opts.swap_roots)
    if cp.repeated_root:
        if n % 2 == 0 and alpha ** (n // 2) == -1:
            return 3 * n, "T7.1.2"
        return 6 * n, "T7.1.2"
    z = _zeta(6, p, opts.zeta_choice)
    if n % 6 == 0 and _pair_equals(alpha ** (n // 6), beta ** (n // 6), z, z.inverse()):
        return n, "T7.1.1.1"
    z2 = z * z
    if n % 3 == 0 and _pair_equals(alpha ** (n // 3), beta ** (n // 3), z2, z2.inverse()):
        return 2 * n, "T7.1.1.2"
    if _half_powers_minus_one(alpha, beta, n):
        return 3 * n, "T7.1.1.2"
    return 6 * n, "T7.1.1.2"


def _wild_or_inert_rule(e: int, cyc: CyclotomicData, thm: str) -> tuple[int, str]:
    """Families T8, T10 and T12: d depends only on e and r (or delta when e = 3)."""
    if e == 3:
        return 6 * cyc.delta, f"{thm}.1"
    return (e * cyc.r if cyc.r % 2 == 0 else 2 * e * cyc.r), f"{thm}.2"


def _aux_frobenius(curve: ResidualCurve, p: int, inter: dict, opts: Options):
    fd = frobenius_data(curve)
    cp = char_poly_roots(fd.a, fd.ell, p)
    inter.update(
        aux_curve=list(curve.coefficients),
        a=fd.a,
        delta_a=fd.delta_a,
        delta_a_mod_p=fd.delta_a % p,
        alpha=cp.alpha,
        beta=cp.beta,
        n=cp.n,
    )
    b_div = None
    if cp.repeated_root:
        b_div = _b_div_for(curve, fd, cp, opts)
        inter["b_divisible"] = b_div
    return fd, cp, b_div


def degree_additive_potgood(
    data: LocalMinimalData, e: int, cyc: CyclotomicData, p: int, opts: Options | None = None, inter=None
) -> tuple[int, str]:
    opts = opts or Options()
    inter = {} if inter is None else inter
    ell = data.ell
    inter["e"] = e
    if ell >= 5:
        if e == 2:
            curve = residual_rescaled_curve(data, 2)
            inter["twist_u"] = ell
            _, cp, b_div = _aux_frobenius(curve, p, inter, opts)
            return _quadratic_twist_rule(cp, b_div, "T4", opts)
        if e not in (3, 4, 6):
            raise ConsistencyError(f"e = {e} impossible at ell = {ell}")
        mod = 4 if e == 4 else 3
        if ell % mod == mod - 1:
            return _wild_or_inert_rule(e, cyc, "T8")
        if e == 6 and p == 3:
            return 6, "T7.2"
        curve = residual_rescaled_curve(data, e)
        _, cp, _ = _aux_frobenius(curve, p, inter, opts)
        return {3: _family5, 4: _family6, 6: _family7}[e](cp, opts)
    if e == 2:
        twist = good_twist_at_small_ell(data)
        inter["twist_u"] = twist.u
        curve = reduce_mod(twist.local)
        fd = frobenius_data(curve)
        cp = char_poly_roots(fd.a, ell, p)
        inter.update(
            aux_curve=list(curve.coefficients),
            a=fd.a,
            delta_a=fd.delta_a,
            delta_a_mod_p=fd.delta_a % p,
            alpha=cp.alpha,
            beta=cp.beta,
            n=cp.n,
        )
        return _quadratic_twist_rule(cp, None, "T9" if ell == 3 else "T11", opts)
    return _wild_or_inert_rule(e, cyc, "T10" if ell == 3 else "T12")


# -------------------------------------------------------------------------


def check_query(ell: int, p: int):
    if not isinstance(ell, int) or not is_prime(ell):
        raise InputError(f"ell must be prime, got {ell}")
    if not isinstance(p, int) or not is_prime(p):
        raise InputError(f"p must be prime, got {p}")
    if p == 2:
        raise InputError("p must be an odd prime (p >= 3)")
    if p == ell:
        raise InputError("p must differ from ell")


def compute_degree(model: CurveModel, ell: int, p: int, options: Options | None = None, **kw) -> DegreeResult:
    opts = options or Options(**kw)
    check_query(ell, p)
    data = minimal_model_at(model, ell)
    info = reduction_info(data, opts.defect, opts.defect_table)
    cyc = cyclotomic_orders(ell, p)
    inter: dict[str, Any] = {
        "vc4": data.vc4,
        "vc6": data.vc6,
        "vD": data.vD,
        "kodaira": data.kodaira,
        "r": cyc.r,
        "delta": cyc.delta,
    }
    kind = info.kind
    if kind is ReductionKind.GOOD:
        curve = reduce_mod(data)
        _, cp, b_div = _aux_frobenius(curve, p, inter, opts)
        d, branch = degree_good(cp, b_div, cyc)
    elif kind is ReductionKind.MULTIPLICATIVE:
        inter.update(vj=data.vj, vj_mod_p=data.vj % p, pth_power_j=is_pth_power_Ql(data.invariants.j, ell, p))
        d, branch = degree_multiplicative(data, info.split_marker, cyc, p)
    elif kind is ReductionKind.ADDITIVE_POT_MULT:
        inter.update(vj=data.vj, vj_mod_p=data.vj % p, pth_power_j=is_pth_power_Ql(data.invariants.j, ell, p))
        d, branch = degree_pot_mult(data, cyc, p)
    else:
        d, branch = degree_additive_potgood(data, info.e, cyc, p, opts, inter)
    return DegreeResult(ell, p, d, branch, info, inter)


def discriminant_exponent(d: int, e: int, D: int) -> int:
    """Exponent of ell generating the discriminant ideal: d*D/e."""
    if d < 1 or e < 1 or D < 0:
        raise InputError("need d >= 1, e >= 1, D >= 0")
    if (d * D) % e:
        raise InputError(f"e = {e} does not divide d*D = {d * D}")
    return d * D // e
