import pytest

from ptord.curves import ResidualCurve
from ptord.errors import InputError, ResourceLimit
from ptord.modular import char_poly_roots, cyclotomic_orders
from ptord.oracles import (
    MatrixModP,
    companion_frobenius_order,
    exhaustive_group_structure,
    exhaustive_pth_power,
    generated_group_order,
    matrix_order,
    tame_image_order,
)


def test_matrix_order():
    assert matrix_order(MatrixModP(1, 0, 0, 1, 7)) == 1
    assert matrix_order(MatrixModP(2, 0, 0, 1, 5)) == 4
    # companion of X^2 - aX + ell with a = -2, ell = 7, reduced mod 3: X^2 + 2X + 1 = (X + 1)^2
    assert matrix_order(MatrixModP(0, -7, 1, -2, 3)) == 6
    # the irreducible X^2 + 2X + 2 would give a Singer cycle of order 8
    assert matrix_order(MatrixModP(0, -2, 1, -2, 3)) == 8


def test_singular_matrix_has_no_order():
    with pytest.raises(InputError):
        matrix_order(MatrixModP(1, 1, 1, 1, 5))


def test_companion_order():
    assert companion_frobenius_order(-2, 7, 5) == 4
    assert companion_frobenius_order(-2, 7, 3) == 6


@pytest.mark.parametrize("ell", [5, 7, 11, 13, 17])
@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_companion_order_supersingular(ell, p):
    if p == ell:
        return
    assert companion_frobenius_order(0, ell, p) == 2 * cyclotomic_orders(ell, p).delta


def test_exhaustive_pth_power():
    assert exhaustive_pth_power(1, 11, 5)
    assert not exhaustive_pth_power(3, 11, 5)
    assert all(exhaustive_pth_power(u, 7, 5) for u in range(1, 7))


def test_group_structure():
    assert exhaustive_group_structure(ResidualCurve(5, 0, 0, 0, 0, 1)) == (1, 6)
    m, k = exhaustive_group_structure(ResidualCurve(7, 0, 0, 0, 2, 4), 2)
    assert m * m * k == 60 and m % 3
    # y^2 = x^3 - x over F_5 has full 2-torsion: Z/2 x Z/4
    assert exhaustive_group_structure(ResidualCurve(5, 0, 0, 0, -1, 0)) == (2, 2)


def test_group_structure_prime_order_is_cyclic():
    for A in range(7):
        for B in range(7):
            c = ResidualCurve(7, 0, 0, 0, A, B)
            if not c.singular:
                m, k = exhaustive_group_structure(c)
                if k in (5, 7, 11):
                    assert m == 1


def test_group_structure_ceiling():
    with pytest.raises(ResourceLimit):
        exhaustive_group_structure(ResidualCurve(2, 0, 0, 1, 0, 0), 14)


def test_generated_group_order_diagonal():
    cp = char_poly_roots(-2, 7, 5)
    assert tame_image_order(cp, 1) == 4
    # -I is not in <diag(1, 2)>, whose first entry is always 1
    assert tame_image_order(cp, 2) == 8


def test_jordan_block_order():
    cp = char_poly_roots(-2, 7, 3)
    assert tame_image_order(cp, 1, b_divisible=False) == 6
    assert tame_image_order(cp, 1, b_divisible=True) == 2


def test_generated_group_trivial():
    assert generated_group_order([]) == 1
