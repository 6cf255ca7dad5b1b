"""Continuant determinants, characteristic polynomials, and the dense oracle."""

import random
from fractions import Fraction

import pytest

from sk_spectra import (JParams, MultiPoly, Tridiagonal, clement, det_cofactor,
                        j_matrix, variables)

lam = MultiPoly.variable("lam")
z0, z1 = variables("z0", "z1")


def random_tridiagonal(rng, order):
    draw = lambda: Fraction(rng.randint(-20, 20), rng.randint(1, 6))
    return Tridiagonal([draw() for _ in range(order)],
                       [draw() for _ in range(order - 1)],
                       [draw() for _ in range(order - 1)])


# -- the cofactor oracle itself -----------------------------------------

def test_cofactor_oracle_on_handworked_matrices():
    assert det_cofactor([[5]]) == 5
    assert det_cofactor([[1, 2], [3, 4]]) == -2
    # 3x3 worked out by the rule of Sarrus
    assert det_cofactor([[1, 2, 3], [4, 5, 6], [7, 8, 10]]) == -3


def test_cofactor_oracle_rejects_ragged_input():
    with pytest.raises(ValueError):
        det_cofactor([[1, 2], [3]])


# -- determinant ---------------------------------------------------------

def test_det_one_by_one_symbolic():
    assert Tridiagonal([z0], [], []).det() == z0


def test_det_clement_three():
    m = clement(3)
    assert m.det() == 9
    # also the closed product (0 - (3-2k)) over k = 0..3
    product = 1
    for k in range(4):
        product *= -(3 - 2 * k)
    assert product == 9
    assert det_cofactor(m.to_dense()) == 9


def test_det_m_family_three_by_three():
    m = Tridiagonal([1, 2, 3], [1, 2], [2, 1])
    assert m.det() == -2
    assert det_cofactor(m.to_dense()) == -2


def test_det_matches_cofactor_on_random_rationals():
    rng = random.Random(1234)
    for _ in range(100):
        m = random_tridiagonal(rng, rng.randint(1, 8))
        assert m.det() == det_cofactor(m.to_dense())


# -- characteristic polynomial --------------------------------------------

def test_charpoly_one_by_one():
    assert Tridiagonal([Fraction(7, 3)], [], []).charpoly() == lam - Fraction(7, 3)
    assert Tridiagonal([z0], [], []).charpoly() == lam - z0


def test_charpoly_clement_one():
    assert clement(1).charpoly() == lam ** 2 - 1


def test_charpoly_clement_three():
    p = clement(3).charpoly()
    assert p == lam ** 4 - 10 * lam ** 2 + 9
    assert p == (lam ** 2 - 1) * (lam ** 2 - 9)


def test_charpoly_sign_relation_with_det():
    rng = random.Random(99)
    for _ in range(25):
        m = random_tridiagonal(rng, rng.randint(1, 6))
        p0 = m.charpoly().evaluate({"lam": Fraction(0)})
        assert m.det() == (-1) ** m.order * p0
    symbolic = j_matrix(JParams.symbolic(3))
    const_term = symbolic.charpoly().coefficients_in("lam").get(0, MultiPoly.zero())
    assert symbolic.det() == const_term  # (-1)^4 = 1 at order 4


def test_charpoly_is_monic_with_trace_coefficient():
    rng = random.Random(7)
    for _ in range(25):
        m = random_tridiagonal(rng, rng.randint(1, 6))
        split = m.charpoly().coefficients_in("lam")
        assert split[m.order] == 1
        assert split.get(m.order - 1, MultiPoly.zero()) == -sum(m.diag)
    m = j_matrix(JParams.symbolic(4))
    split = m.charpoly().coefficients_in("lam")
    assert split[5] == 1
    assert split[4] == -sum(m.diag)


def test_charpoly_rejects_float_entries():
    with pytest.raises(TypeError):
        Tridiagonal([0.5], [], []).charpoly()


def test_charpoly_float_tracks_exact_coefficients():
    rng = random.Random(5)
    for _ in range(20):
        order = rng.randint(1, 8)
        m = Tridiagonal([Fraction(rng.randint(-8, 8)) for _ in range(order)],
                        [Fraction(rng.randint(-8, 8)) for _ in range(order - 1)],
                        [Fraction(rng.randint(-8, 8)) for _ in range(order - 1)])
        exact = m.charpoly().coefficients_in("lam")
        approx = m.charpoly_float()
        assert len(approx) == order + 1
        for degree, value in enumerate(approx):
            poly = exact.get(degree)
            want = float(poly.constant_value()) if poly is not None else 0.0
            assert value == pytest.approx(want, rel=1e-12, abs=1e-9)


# -- dense view and band editing -------------------------------------------

def test_to_dense_one_by_one_symbolic():
    assert Tridiagonal([z0], [], []).to_dense() == [[z0]]


def test_to_dense_clement_one():
    assert clement(1).to_dense() == [[0, 1], [1, 0]]


def test_to_dense_j_one():
    dense = j_matrix(JParams.symbolic(1)).to_dense()
    assert dense == [[z0 + z1, 1], [1, z0 - z1]]


def test_with_band_entry_copies():
    m = clement(2)
    changed = m.with_band_entry("super", 1, 9)
    assert changed.superdiag[1] == 9
    assert m.superdiag[1] == 2
    with pytest.raises(ValueError):
        m.with_band_entry("corner", 0, 1)


def test_band_length_validation():
    with pytest.raises(ValueError):
        Tridiagonal([], [], [])
    with pytest.raises(ValueError):
        Tridiagonal([1, 2], [1, 2], [1])
