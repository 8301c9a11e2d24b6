"""Two-letter symmetric functions: tables, conventions, basis identities."""

import pytest

from convcheck.arith import MultiPoly
from convcheck.quadext import make_root_pair
from convcheck.symfun import LetterPair, ring_one, ring_zero, sym_S, sym_ehp, sym_phi

x1 = MultiPoly.var("x1")
x2 = MultiPoly.var("x2")
PAIR = LetterPair(x1, x2)


def test_complete_homogeneous_small_table():
    assert sym_S(PAIR, 0) == MultiPoly.constant(1)
    assert sym_S(PAIR, 1) == x1 + x2
    assert str(sym_S(PAIR, 2)) == "x1^2 + x1*x2 + x2^2"
    assert sym_S(PAIR, 3) == x1 ** 3 + x1 ** 2 * x2 + x1 * x2 ** 2 + x2 ** 3


def test_negative_indices_vanish():
    for n in (-1, -2, -7):
        assert sym_S(PAIR, n).is_zero()
    with pytest.raises(ValueError):
        sym_phi(PAIR, -1)


def test_power_sum_small_table():
    assert sym_phi(PAIR, 0) == MultiPoly.constant(2)
    assert sym_phi(PAIR, 1) == x1 + x2
    assert sym_phi(PAIR, 2) == x1 ** 2 + x2 ** 2


def test_sum_matches_literal_definition():
    for n in range(0, 12):
        literal = MultiPoly.constant(0)
        for i in range(n + 1):
            literal = literal + x1 ** i * x2 ** (n - i)
        assert sym_S(PAIR, n) == literal


def test_h_and_p_coincide_with_s_and_phi():
    for n in range(0, 41):
        assert sym_ehp("h", n, PAIR) == sym_S(PAIR, n)
        assert sym_ehp("p", n, PAIR) == sym_phi(PAIR, n)


def test_elementary_basis_truncates_at_two_letters():
    assert sym_ehp("e", 0, PAIR) == MultiPoly.constant(1)
    assert sym_ehp("e", 1, PAIR) == x1 + x2
    assert sym_ehp("e", 2, PAIR) == x1 * x2
    for k in range(3, 9):
        assert sym_ehp("e", k, PAIR).is_zero()


def test_newton_relation_two_letters():
    # p_n = e_1 p_(n-1) - e_2 p_(n-2) for n >= 2
    e1 = sym_ehp("e", 1, PAIR)
    e2 = sym_ehp("e", 2, PAIR)
    for n in range(2, 20):
        assert sym_phi(PAIR, n) == e1 * sym_phi(PAIR, n - 1) - e2 * sym_phi(PAIR, n - 2)


def test_works_over_extension_ring():
    rp = make_root_pair("fibonacci")
    pair = LetterPair(rp.lam1, rp.lam2)
    assert ring_one(pair) == 1
    assert ring_zero(pair).is_zero()
    # S_n is symmetric, hence has no sqrt part over conjugate letters
    for n in range(0, 8):
        val = sym_S(pair, n)
        assert val.b.is_zero()


def test_unknown_basis_kind_rejected():
    with pytest.raises(ValueError):
        sym_ehp("m", 1, PAIR)
    with pytest.raises(ValueError):
        sym_ehp("h", -1, PAIR)
