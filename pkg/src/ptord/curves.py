"""Integral Weierstrass models over Q, their invariants, twists and local minimal models."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import inf

from .errors import ConsistencyError, InputError
from .modular import factorize, is_prime, valuation

__all__ = [
    "CurveModel",
    "StandardInvariants",
    "LocalMinimalData",
    "ResidualCurve",
    "standard_invariants",
    "valuation",
    "quadratic_twist",
    "from_c4c6",
    "minimal_model_at",
    "reduce_mod",
]


@dataclass(frozen=True)
class CurveModel:
    a1: int
    a2: int
    a3: int
    a4: int
    a6: int

    def __post_init__(self):
        for name in ("a1", "a2", "a3", "a4", "a6"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                if isinstance(value, Fraction) and value.denominator == 1:
                    object.__setattr__(self, name, int(value))
                    continue
                raise InputError(f"{name} must be an integer, got {value!r}")

    @classmethod
    def short(cls, a4: int, a6: int) -> CurveModel:
        return cls(0, 0, 0, a4, a6)

    @property
    def coefficients(self) -> tuple[int, int, int, int, int]:
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    def invariants(self) -> StandardInvariants:
        return standard_invariants(self)

    def change_coordinates(self, r: int = 0, s: int = 0, t: int = 0) -> CurveModel:
        """Model after x -> x + r, y -> y + s x + t (u = 1)."""
        a1, a2, a3, a4, a6 = self.coefficients
        return CurveModel(
            a1 + 2 * s,
            a2 - s * a1 + 3 * r - s * s,
            a3 + r * a1 + 2 * t,
            a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t,
            a6 + r * a4 + r * r * a2 + r**3 - t * a3 - t * t - r * t * a1,
        )

    def scaled(self, u: int) -> CurveModel:
        """The model with a_i multiplied by u^i (same curve, Delta scaled by u^12)."""
        a1, a2, a3, a4, a6 = self.coefficients
        return CurveModel(a1 * u, a2 * u**2, a3 * u**3, a4 * u**4, a6 * u**6)

    def __str__(self):
        return "[" + ",".join(str(c) for c in self.coefficients) + "]"


@dataclass(frozen=True)
class StandardInvariants:
    b2: int
    b4: int
    b6: int
    b8: int
    c4: int
    c6: int
    disc: int
    j: Fraction


def _b_invariants(a1, a2, a3, a4, a6):
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
    return b2, b4, b6, b8


def standard_invariants(model: CurveModel) -> StandardInvariants:
    b2, b4, b6, b8 = _b_invariants(*model.coefficients)
    c4 = b2 * b2 - 24 * b4
    c6 = -(b2**3) + 36 * b2 * b4 - 216 * b6
    disc = -b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6
    if disc == 0:
        raise InputError(f"singular model {model}: discriminant is 0")
    assert c4**3 - c6**2 == 1728 * disc
    return StandardInvariants(b2, b4, b6, b8, c4, c6, disc, Fraction(c4**3, disc))


def from_c4c6(c4: int, c6: int) -> CurveModel:
    """An integral model with exactly these c4, c6, if one exists."""
    if c4**3 == c6**2:
        raise InputError("c4^3 = c6^2 gives a singular curve")
    b2 = (-c6) % 12
    if b2 > 6:
        b2 -= 12
    num4 = b2 * b2 - c4
    if num4 % 24:
        raise InputError(f"no integral model with c4={c4}, c6={c6}")
    b4 = num4 // 24
    num6 = -(b2**3) + 36 * b2 * b4 - c6
    if num6 % 216:
        raise InputError(f"no integral model with c4={c4}, c6={c6}")
    b6 = num6 // 216
    a1 = b2 % 2
    a3 = b6 % 2
    a2, r2 = divmod(b2 - a1, 4)
    a4, r4 = divmod(b4 - a1 * a3, 2)
    a6, r6 = divmod(b6 - a3, 4)
    if r2 or r4 or r6:
        raise InputError(f"no integral model with c4={c4}, c6={c6}")
    model = CurveModel(a1, a2, a3, a4, a6)
    inv = standard_invariants(model)
    if (inv.c4, inv.c6) != (c4, c6):
        raise InputError(f"no integral model with c4={c4}, c6={c6}")
    return model


def squarefree_part(u: int) -> int:
    if u == 0:
        raise InputError("cannot twist by 0")
    sign = -1 if u < 0 else 1
    out = 1
    for q, k in factorize(abs(u)).items():
        if k % 2:
            out *= q
    return sign * out


def quadratic_twist(model: CurveModel, u: int) -> CurveModel:
    """Twist by sqrt(u).  Invariants scale by (u^2, u^3, u^6) after squarefree reduction of u.

    When no integral model carries those invariants exactly, the returned model is the
    2-scaled one (invariants times 2^4, 2^6, 2^12); it is isomorphic over Q to the twist.
    """
    u = squarefree_part(u)
    if u == 1:
        return model
    inv = standard_invariants(model)
    try:
        return from_c4c6(u * u * inv.c4, u**3 * inv.c6)
    except InputError:
        return CurveModel(0, u * inv.b2, 0, 8 * u * u * inv.b4, 16 * u**3 * inv.b6)


# -------------------------------------------------------------------------
# Tate's algorithm


@dataclass(frozen=True)
class LocalMinimalData:
    ell: int
    minimal_model: CurveModel
    vc4: int | float
    vc6: int | float
    vD: int
    u_c4: int | None
    u_c6: int | None
    u_Delta: int
    residue_modulus: int
    vj: int | float
    jt_mod_ell: int | None
    kodaira: str
    conductor_exponent: int
    components: int

    @property
    def triple(self):
        return (self.vc4, self.vc6, self.vD)

    @property
    def invariants(self) -> StandardInvariants:
        return standard_invariants(self.minimal_model)


def _roots_mod(coeffs: list[int], p: int) -> list[int]:
    # coeffs lowest degree first; brute force, only used for p in {2, 3}
    return [x for x in range(p) if sum(c * x**i for i, c in enumerate(coeffs)) % p == 0]


def _check(cond: bool, what: str):
    if not cond:
        raise ConsistencyError(f"Tate's algorithm invariant failed: {what}")


def _singular_point_shift(m: CurveModel, p: int) -> tuple[int, int]:
    """(r, t) moving the singular point of the reduction to (0, 0)."""
    a1, a2, a3, a4, a6 = m.coefficients
    if p <= 3:
        for x in range(p):
            for y in range(p):
                f = y * y + a1 * x * y + a3 * y - x**3 - a2 * x * x - a4 * x - a6
                fx = a1 * y - 3 * x * x - 2 * a2 * x - a4
                fy = 2 * y + a1 * x + a3
                if f % p == 0 and fx % p == 0 and fy % p == 0:
                    return x, y
        raise ConsistencyError("reduction is singular but no singular point found")
    inv = standard_invariants(m)
    if inv.c4 % p == 0:
        r = -inv.b2 * pow(12, -1, p)
    else:
        r = -(inv.c6 + inv.b2 * inv.c4) * pow(12 * inv.c4, -1, p)
    r %= p
    t = (-(a1 * r + a3) * pow(2, -1, p)) % p
    return r, t


def _distinct_quadratic(alpha: int, beta: int, p: int) -> bool:
    # Y^2 + alpha Y - beta mod p
    if p == 2:
        return alpha % 2 == 1
    return (alpha * alpha + 4 * beta) % p != 0


def _quadratic_double_root(alpha: int, beta: int, p: int) -> int:
    if p == 2:
        return beta % 2
    return (-alpha * pow(2, -1, p)) % p


def _tate(model: CurveModel, p: int):
    """Returns (minimal model, Kodaira symbol, number of components m)."""
    m = model
    while True:
        inv = standard_invariants(m)
        vD = valuation(inv.disc, p)
        if vD == 0:
            return m, "I0", 1
        r, t = _singular_point_shift(m, p)
        m = m.change_coordinates(r=r, t=t)
        a1, a2, a3, a4, a6 = m.coefficients
        _check(a3 % p == 0 and a4 % p == 0 and a6 % p == 0, "p | a3, a4, a6 after moving the singular point")
        inv = standard_invariants(m)
        if inv.b2 % p:
            return m, f"I{vD}", vD
        if a6 % p**2:
            return m, "II", 1
        if inv.b8 % p**3:
            return m, "III", 2
        if inv.b6 % p**3:
            return m, "IV", 3
        if p == 2:
            s = a2 % 2
            t = 2 * ((a6 // 4) % 2)
        else:
            half = (p + 1) // 2
            s = -a1 * half
            t = -a3 * half
        m = m.change_coordinates(s=s, t=t)
        a1, a2, a3, a4, a6 = m.coefficients
        _check(
            a1 % p == 0 and a2 % p == 0 and a3 % p**2 == 0 and a4 % p**2 == 0 and a6 % p**3 == 0,
            "step 6 divisibilities",
        )
        b, c, d = a2 // p, a4 // p**2, a6 // p**3
        # P(T) = T^3 + b T^2 + c T + d
        w = 27 * d * d - b * b * c * c + 4 * b**3 * d - 18 * b * c * d + 4 * c**3
        x = 3 * c - b * b
        if w % p:
            return m, "I0*", 5
        if x % p:
            # one double root; move it to T = 0
            if p <= 3:
                roots = [z for z in _roots_mod([d, c, b, 1], p) if (3 * z * z + 2 * b * z + c) % p == 0]
                _check(len(roots) == 1, "unique double root")
                r0 = roots[0]
            else:
                r0 = (b * c - 9 * d) * pow(2 * x, -1, p) % p
            m = m.change_coordinates(r=p * r0)
            mx = my = p * p
            n = 1
            while True:
                a1, a2, a3, a4, a6 = m.coefficients
                _check(a3 % my == 0 and a6 % (mx * my) == 0, "In* loop divisibility (y)")
                xa3, xa6 = a3 // my, a6 // (mx * my)
                if _distinct_quadratic(xa3, xa6, p):
                    break
                m = m.change_coordinates(t=my * _quadratic_double_root(xa3, xa6, p))
                my *= p
                n += 1
                a1, a2, a3, a4, a6 = m.coefficients
                _check(a4 % (p * mx) == 0 and a6 % (mx * my) == 0, "In* loop divisibility (x)")
                xa2, xa4, xa6 = a2 // p, a4 // (p * mx), a6 // (mx * my)
                if p == 2:
                    distinct = xa4 % 2 == 1
                    root = xa6 % 2
                else:
                    distinct = (xa4 * xa4 - 4 * xa2 * xa6) % p != 0
                    root = (-xa4 * pow(2 * xa2, -1, p)) % p
                if distinct:
                    break
                m = m.change_coordinates(r=mx * root)
                mx *= p
                n += 1
            return m, f"I{n}*", 5 + n
        # triple root
        if p <= 3:
            roots = _roots_mod([d, c, b, 1], p)
            _check(len(roots) == 1, "unique triple root")
            r0 = roots[0]
        else:
            r0 = (-b * pow(3, -1, p)) % p
        m = m.change_coordinates(r=p * r0)
        a1, a2, a3, a4, a6 = m.coefficients
        _check(a2 % p**2 == 0 and a4 % p**3 == 0 and a6 % p**4 == 0, "triple root moved to 0")
        xa3, xa6 = a3 // p**2, a6 // p**4
        if _distinct_quadratic(xa3, xa6, p):
            return m, "IV*", 7
        m = m.change_coordinates(t=p**2 * _quadratic_double_root(xa3, xa6, p))
        a1, a2, a3, a4, a6 = m.coefficients
        _check(a3 % p**3 == 0 and a6 % p**5 == 0, "step 9 divisibility")
        if a4 % p**4:
            return m, "III*", 8
        if a6 % p**6:
            return m, "II*", 9
        m = CurveModel(a1 // p, a2 // p**2, a3 // p**3, a4 // p**4, a6 // p**6)


def minimal_model_at(model: CurveModel, ell: int, residue_power: int = 4) -> LocalMinimalData:
    """Minimal model at ell via Tate's algorithm, with valuations and unit residues.

    Unit residues are stored modulo ell**residue_power (at least ell^3 at ell = 2).
    """
    if not is_prime(ell):
        raise InputError(f"ell must be prime, got {ell}")
    if residue_power < 1 or (ell == 2 and residue_power < 3):
        raise InputError("residue precision too small")
    standard_invariants(model)  # rejects singular input
    m, kod, comps = _tate(model, ell)
    inv = standard_invariants(m)
    v4, v6, vD = valuation(inv.c4, ell), valuation(inv.c6, ell), valuation(inv.disc, ell)
    mod = ell**residue_power

    def unit(x, v):
        return None if v == inf else (x // ell**v) % mod

    if v4 == inf:
        vj, jt = inf, None
    else:
        vj = 3 * v4 - vD
        jt = (Fraction(inv.j) / Fraction(ell) ** vj)
        jt = jt.numerator * pow(jt.denominator, -1, ell) % ell
    if ell >= 5 and not (v4 < 4 or vD < 12):
        raise ConsistencyError("minimal model at ell >= 5 has v(c4) >= 4 and v(Delta) >= 12")
    return LocalMinimalData(
        ell=ell,
        minimal_model=m,
        vc4=v4,
        vc6=v6,
        vD=vD,
        u_c4=unit(inv.c4, v4),
        u_c6=unit(inv.c6, v6),
        u_Delta=unit(inv.disc, vD),
        residue_modulus=mod,
        vj=vj,
        jt_mod_ell=jt,
        kodaira=kod,
        conductor_exponent=vD - comps + 1,
        components=comps,
    )


@dataclass(frozen=True)
class ResidualCurve:
    """A Weierstrass model over F_ell (coefficients reduced mod ell)."""

    ell: int
    a1: int
    a2: int
    a3: int
    a4: int
    a6: int

    @property
    def coefficients(self):
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    def discriminant_mod(self) -> int:
        b2, b4, b6, b8 = _b_invariants(*self.coefficients)
        return (-b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6) % self.ell

    @property
    def singular(self) -> bool:
        return self.discriminant_mod() == 0


def reduce_mod(data: LocalMinimalData, require_good: bool = True) -> ResidualCurve:
    ell = data.ell
    curve = ResidualCurve(ell, *(c % ell for c in data.minimal_model.coefficients))
    if require_good and curve.singular:
        raise InputError(f"reduction mod {ell} is singular (v(Delta) = {data.vD})")
    return curve

