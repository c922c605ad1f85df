"""Degree of the p-torsion field of an elliptic curve over Q_ell.

>>> from ptord import CurveModel, compute_degree
>>> compute_degree(CurveModel(0, 0, 0, -432, -864), 7, 5).d
4
"""

from .curves import CurveModel, LocalMinimalData, ResidualCurve, from_c4c6, minimal_model_at, quadratic_twist
from .engine import DegreeResult, Options, compute_degree, discriminant_exponent
from .errors import ConsistencyError, DefectTableMiss, InputError, PtordError, ResourceLimit
from .frobenius import b_index_divisible, count_points, frobenius_data, trace_power
from .modular import char_poly_roots, cyclotomic_orders, is_pth_power_Ql
from .oracles import check_consistency, verify_result
from .reduction import ReductionInfo, ReductionKind, load_defect_table, lookup_defect, reduction_info

__all__ = [
    "CurveModel",
    "LocalMinimalData",
    "ResidualCurve",
    "from_c4c6",
    "minimal_model_at",
    "quadratic_twist",
    "DegreeResult",
    "Options",
    "compute_degree",
    "discriminant_exponent",
    "ConsistencyError",
    "DefectTableMiss",
    "InputError",
    "PtordError",
    "ResourceLimit",
    "b_index_divisible",
    "count_points",
    "frobenius_data",
    "trace_power",
    "char_poly_roots",
    "cyclotomic_orders",
    "is_pth_power_Ql",
    "check_consistency",
    "verify_result",
    "ReductionInfo",
    "ReductionKind",
    "load_defect_table",
    "lookup_defect",
    "reduction_info",
]
