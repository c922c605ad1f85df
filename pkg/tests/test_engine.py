import itertools

import pytest

from conftest import WORKED_EXAMPLE
from ptord import CurveModel, Options, compute_degree, discriminant_exponent
from ptord.curves import minimal_model_at, quadratic_twist
from ptord.engine import degree_good, degree_multiplicative, degree_pot_mult
from ptord.errors import ConsistencyError, InputError
from ptord.modular import char_poly_roots, cyclotomic_orders
from ptord.oracles import check_consistency, verify_result
from ptord.reduction import ReductionKind


@pytest.mark.parametrize("ell, p", sorted(WORKED_EXAMPLE))
def test_worked_example(E0, ell, p):
    res = compute_degree(E0, ell, p)
    assert (res.d, res.branch) == WORKED_EXAMPLE[(ell, p)]
    assert verify_result(res) == []


def test_three_eleven_is_theorem_ten_value(E0):
    # the printed table has 110 here; Theorem 10 part 2 gives 2er = 2*6*5
    res = compute_degree(E0, 3, 11)
    assert res.reduction.e == 6 and res.intermediates["r"] == 5 and res.d == 60


@pytest.mark.parametrize("p, b_div, d", [(5, None, 4), (3, False, 6), (11, None, 10)])
def test_degree_good(p, b_div, d):
    cp = char_poly_roots(-2, 7, p)
    assert degree_good(cp, b_div, cyclotomic_orders(7, p))[0] == d


def test_degree_good_needs_b_for_repeated_root():
    with pytest.raises(InputError):
        degree_good(char_poly_roots(-2, 7, 3))


@pytest.mark.parametrize("p, d", [(3, 6), (7, 42), (11, 55)])
def test_degree_multiplicative(E0, p, d):
    data = minimal_model_at(E0, 5)
    assert degree_multiplicative(data, True, cyclotomic_orders(5, p), p)[0] == d


@pytest.mark.parametrize("p, d", [(3, 12), (11, 110)])
def test_potentially_multiplicative_twist(E0, p, d):
    data = minimal_model_at(quadratic_twist(E0, 5), 5)
    assert degree_pot_mult(data, cyclotomic_orders(5, p), p) == (d, "T3.1")
    assert compute_degree(quadratic_twist(E0, 5), 5, p).d == d


def test_potentially_multiplicative_trivial_case():
    # v(j) = -3 and j a cube in Q_7, 7 = 1 mod 3
    res = compute_degree(CurveModel(0, 0, 0, -1519, -6517), 7, 3)
    assert res.reduction.kind is ReductionKind.ADDITIVE_POT_MULT
    assert (res.d, res.branch) == (2, "T3.2")


# one curve per rarely reached branch; every value is cross-checked by verify_result
RARE = [
    ((0, 0, 0, -150, -375), 5, 11, 110, "T4.2.1"),
    ((0, 0, 0, -100, -750), 5, 11, 110, "T4.2.2"),
    ((0, 0, 0, 0, 4805), 31, 5, 6, "T5.1.2"),
    ((0, 0, 0, 0, -294), 7, 3, 3, "T5.2"),
    ((0, 0, 0, -78, 0), 13, 3, 4, "T6.2"),
    ((0, 0, 0, 0, 155), 31, 5, 6, "T7.1.2"),
    ((0, 3, 0, -648, -8208), 3, 11, 110, "T9.2"),
    ((0, 3, 0, -72, 240), 2, 5, 24, "T11.1"),
    ((0, 3, 0, -72, 240), 2, 7, 42, "T11.2"),
    ((0, 0, 0, 0, 25), 5, 7, 18, "T8.1"),
    ((0, 0, 0, -25, 0), 5, 3, 8, "T4.1"),
]


@pytest.mark.parametrize("a, ell, p, d, branch", RARE, ids=[r[4] for r in RARE])
def test_rare_branches(a, ell, p, d, branch):
    res = compute_degree(CurveModel(*a), ell, p)
    assert (res.d, res.branch) == (d, branch)
    assert verify_result(res) == []


def _families(ells, span):
    for ell in ells:
        for A, B in itertools.product(range(-span, span + 1), repeat=2):
            yield CurveModel(0, 0, 0, A * ell * ell, B * ell**3), ell
            yield CurveModel(0, 0, 0, 0, B * ell * ell), ell
            yield CurveModel(0, 0, 0, 0, B * ell), ell
            yield CurveModel(0, 0, 0, A * ell, 0), ell


def test_tame_branches_match_generated_group_order():
    checked = set()
    for model, ell in _families((5, 7, 11, 13), 3):
        for p in (3, 5, 7, 11, 13):
            if p == ell:
                continue
            try:
                res = compute_degree(model, ell, p)
            except InputError:
                continue
            assert verify_result(res) == [], (model, ell, p, res.branch)
            checked.add(res.branch)
    assert {"T4.1", "T5.1.1", "T6.1", "T7.1.1.1", "T7.1.1.2", "T8.1", "T8.2"} <= checked


def test_small_ell_twist_branches_match_group_order():
    branches = set()
    for a in itertools.product((-1, 0, 1), (-1, 0, 1), (-1, 0, 1), range(-3, 4), range(-3, 4)):
        for u in (-1, 2, -2, 3):
            try:
                model = quadratic_twist(CurveModel(*a), u)
            except InputError:
                continue
            for ell, p in ((2, 5), (2, 7), (3, 5), (3, 11)):
                res = compute_degree(model, ell, p)
                if res.branch.split(".")[0] in ("T9", "T11"):
                    assert verify_result(res) == [], (model, ell, p)
                    branches.add(res.branch)
    assert {"T9.1", "T11.1", "T11.2"} <= branches


def test_options_do_not_change_degree(E0):
    for ell, p in WORKED_EXAMPLE:
        base = compute_degree(E0, ell, p).d
        for opts in (Options(swap_roots=True), Options(zeta_choice=-1), Options(seed=1), Options(b_method="divpoly")):
            assert compute_degree(E0, ell, p, opts).d == base


@pytest.mark.parametrize("ell, p, msg", [(7, 7, "p must differ from ell"), (4, 3, "ell must be prime"), (7, 2, "odd")])
def test_query_preconditions(E0, ell, p, msg):
    with pytest.raises(InputError, match=msg):
        compute_degree(E0, ell, p)


def test_corrupted_result_is_flagged(E0):
    res = compute_degree(E0, 2, 11)
    assert check_consistency(res) == []
    res.d += 1
    assert check_consistency(res) != []


@pytest.mark.parametrize("d, e, D, x", [(48, 24, 50, 100), (24, 6, 9, 36), (10, 5, 0, 0)])
def test_discriminant_exponent(d, e, D, x):
    assert discriminant_exponent(d, e, D) == x


def test_discriminant_exponent_rejects_non_divisible():
    with pytest.raises(InputError):
        discriminant_exponent(3, 2, 1)


def test_consistency_guard_for_forced_repeated_root():
    from ptord.engine import _quadratic_twist_rule

    cp = char_poly_roots(-2, 7, 3)  # repeated root at p = 3
    with pytest.raises(ConsistencyError):
        _quadratic_twist_rule(cp, None, "T9", Options())


def test_result_document_is_json_ready(E0):
    import json

    doc = compute_degree(E0, 7, 11).to_dict()
    assert json.loads(json.dumps(doc))["intermediates"]["alpha"] in ("3", "6")
