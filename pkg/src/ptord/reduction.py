"""Reduction type at ell and the semistability defect e."""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from importlib import resources
from math import gcd, inf
from pathlib import Path

from .curves import LocalMinimalData
from .errors import DefectTableMiss, InputError
from .modular import legendre


class ReductionKind(str, Enum):
    GOOD = "Good"
    MULTIPLICATIVE = "Multiplicative"
    ADDITIVE_POT_MULT = "AdditivePotentiallyMultiplicative"
    ADDITIVE_POT_GOOD = "AdditivePotentiallyGood"


class DefectSource(str, Enum):
    FORMULA = "Formula51"
    TABLE = "BundledTable"
    OVERRIDE = "UserOverride"


ALLOWED_DEFECTS = {2: {2, 3, 4, 6, 8, 24}, 3: {2, 3, 4, 6, 12}}
ALLOWED_DEFECTS_LARGE = {2, 3, 4, 6}


@dataclass(frozen=True)
class ReductionInfo:
    kind: ReductionKind
    e: int | None = None
    split_marker: bool | None = None
    defect_source: DefectSource | None = None

    def to_dict(self):
        return {
            "kind": self.kind.value,
            "e": self.e,
            "split": self.split_marker,
            "defect_source": self.defect_source.value if self.defect_source else None,
        }


def is_split(data: LocalMinimalData) -> bool:
    """Multiplicative case: is -c6 a square in Q_ell."""
    if data.ell == 2:
        return data.u_c6 % 8 == 7
    return legendre(-data.u_c6, data.ell) == 1


def classify_reduction(data: LocalMinimalData) -> ReductionInfo:
    if data.vD == 0:
        return ReductionInfo(ReductionKind.GOOD)
    if data.vc4 == 0:
        return ReductionInfo(ReductionKind.MULTIPLICATIVE, split_marker=is_split(data))
    if data.vj < 0:
        return ReductionInfo(ReductionKind.ADDITIVE_POT_MULT)
    return ReductionInfo(ReductionKind.ADDITIVE_POT_GOOD)


# -------------------------------------------------------------------------
# defect table

_PATTERN = re.compile(r"^(\*|>=\d+|\d+|inf)$")
_COND = re.compile(r"^(c4u|c6u|Du)%(\d+)=(\d+(?:,\d+)*)$")


@dataclass(frozen=True)
class DefectRule:
    ell: int
    patterns: tuple[str, str, str]
    e: int
    conditions: tuple[tuple[str, int, frozenset], ...]
    line: int
    note: str

    def matches(self, data: LocalMinimalData) -> bool:
        if data.ell != self.ell:
            return False
        for pat, v in zip(self.patterns, data.triple):
            if not _pattern_matches(pat, v):
                return False
        units = {"c4u": data.u_c4, "c6u": data.u_c6, "Du": data.u_Delta}
        for name, mod, allowed in self.conditions:
            u = units[name]
            if u is None:
                return False
            if data.residue_modulus % mod:
                raise InputError(
                    f"defect table line {self.line} needs residues mod {mod}; "
                    f"data carries them mod {data.residue_modulus}"
                )
            if u % mod not in allowed:
                return False
        return True


def _pattern_matches(pat: str, v) -> bool:
    if pat == "*":
        return True
    if pat == "inf":
        return v == inf
    if pat.startswith(">="):
        return v >= int(pat[2:])
    return v == int(pat)


def parse_defect_table(text: str, source: str = "<table>") -> tuple[DefectRule, ...]:
    rules = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        body, _, note = raw.partition("#")
        fields = body.split()
        if not fields:
            continue
        if len(fields) < 5:
            raise InputError(f"{source}:{lineno}: expected 'ell vc4 vc6 vD e [conditions]'")
        try:
            ell = int(fields[0])
            e = int(fields[4])
        except ValueError:
            raise InputError(f"{source}:{lineno}: ell and e must be integers") from None
        if ell not in ALLOWED_DEFECTS:
            raise InputError(f"{source}:{lineno}: table rows are for ell = 2 or 3 only")
        if e not in ALLOWED_DEFECTS[ell]:
            raise InputError(f"{source}:{lineno}: e = {e} impossible at ell = {ell}")
        pats = tuple(fields[1:4])
        for pat in pats:
            if not _PATTERN.match(pat):
                raise InputError(f"{source}:{lineno}: bad valuation pattern {pat!r}")
        conds = []
        for tok in fields[5:]:
            m = _COND.match(tok)
            if not m:
                raise InputError(f"{source}:{lineno}: bad residue condition {tok!r}")
            conds.append((m.group(1), int(m.group(2)), frozenset(int(x) for x in m.group(3).split(","))))
        rules.append(DefectRule(ell, pats, e, tuple(conds), lineno, note.strip()))
    return tuple(rules)


@lru_cache(maxsize=8)
def load_defect_table(path: str | None = None) -> tuple[DefectRule, ...]:
    if path is None:
        text = resources.files("ptord").joinpath("data/defect_table.txt").read_text(encoding="utf-8")
        return parse_defect_table(text, "defect_table.txt")
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read defect table {path}: {exc}") from None
    return parse_defect_table(text, str(p))


def lookup_defect(data: LocalMinimalData, table=None) -> int:
    rules = load_defect_table() if table is None else table
    for rule in rules:
        if rule.matches(data):
            return rule.e
    raise DefectTableMiss(data.ell, data.triple)


def semistability_defect(
    data: LocalMinimalData, override: int | None = None, table=None
) -> tuple[int, DefectSource]:
    ell = data.ell
    allowed = ALLOWED_DEFECTS.get(ell, ALLOWED_DEFECTS_LARGE)
    if override is not None:
        if override not in allowed:
            raise InputError(f"defect override e = {override} impossible at ell = {ell}")
        return override, DefectSource.OVERRIDE
    if ell >= 5:
        return 12 // gcd(12, data.vD), DefectSource.FORMULA
    return lookup_defect(data, table), DefectSource.TABLE


def reduction_info(data: LocalMinimalData, override: int | None = None, table=None) -> ReductionInfo:
    info = classify_reduction(data)
    if info.kind is not ReductionKind.ADDITIVE_POT_GOOD:
        return info
    e, src = semistability_defect(data, override, table)
    return ReductionInfo(info.kind, e, None, src)
