"""Quadratic extension ring and the two built-in root pairs."""

import pytest

from convcheck._scalar import Rational
from convcheck.arith import MultiPoly
from convcheck.quadext import (
    FAMILIES,
    QuadExtElem,
    make_root_pair,
    qe_arith,
    qe_binet_ratio,
    qe_pow,
    qe_rational_part,
    qe_substitute,
)
from convcheck.sequences import bivariate_sequence

y = MultiPoly.var("y")
t = MultiPoly.var("t")


def test_norm_via_conjugate():
    pair = make_root_pair("fibonacci")
    u = QuadExtElem(y, t + 1, pair.disc)
    prod = u * u.conjugate()
    assert prod.b.is_zero()
    assert prod.a == y * y - (t + 1) ** 2 * pair.disc.poly


def test_pow_matches_repeated_multiplication():
    pair = make_root_pair("balancing")
    u = QuadExtElem(1, y, pair.disc)
    acc = QuadExtElem(1, 0, pair.disc)
    for e in range(7):
        assert qe_pow(u, e) == acc
        acc = acc * u
    with pytest.raises(ValueError):
        qe_pow(u, -2)


def test_mixed_discriminants_rejected():
    fib = make_root_pair("fibonacci")
    bal = make_root_pair("balancing")
    with pytest.raises(ValueError):
        fib.lam1 * bal.lam1
    with pytest.raises(ValueError):
        qe_arith("add", fib.lam1, bal.lam2)


def test_root_pairs_satisfy_their_quadratics():
    for family in FAMILIES:
        pair = make_root_pair(family)
        for lam in (pair.lam1, pair.lam2):
            # X^2 - trace*X + norm = 0
            assert (lam * lam - pair.trace * lam + pair.norm).is_zero()
        assert pair.lam1 + pair.lam2 == pair.trace
        prod = pair.lam1 * pair.lam2
        assert prod.b.is_zero() and prod.a == pair.norm


def test_root_difference_scale():
    for family in FAMILIES:
        pair = make_root_pair(family)
        diff = pair.lam1 - pair.lam2
        assert diff.a.is_zero()
        assert diff.b == MultiPoly.constant(pair.diff_scale)


def test_binet_ratio_reproduces_recurrences():
    fib = make_root_pair("fibonacci")
    bal = make_root_pair("balancing")
    for n in range(0, 25):
        assert qe_binet_ratio(fib, n) == bivariate_sequence("fibonacci", n)
        assert qe_binet_ratio(bal, n) == bivariate_sequence("balancing", n)


def test_rational_part_reproduces_trace_sequences():
    fib = make_root_pair("fibonacci")
    bal = make_root_pair("balancing")
    for n in range(0, 25):
        lucas = 2 * qe_rational_part(qe_pow(fib.lam1, n))
        assert lucas == bivariate_sequence("lucas", n)
        lucas_bal = qe_rational_part(qe_pow(bal.lam1, n))
        assert lucas_bal == bivariate_sequence("lucas_balancing", n)


def test_substitute_maps_discriminant_too():
    pair = make_root_pair("fibonacci")
    u = QuadExtElem(y, 1, pair.disc)
    v = qe_substitute(u, {"y": 1, "t": 1})
    assert v.a == MultiPoly.constant(1)
    assert v.disc.poly == MultiPoly.constant(5)
    # squaring after substitution uses the substituted discriminant
    sq = v * v
    assert sq.a == MultiPoly.constant(6)  # 1 + 1*5
    assert sq.b == MultiPoly.constant(2)


def test_str_of_rational_element_is_plain():
    pair = make_root_pair("balancing")
    elem = QuadExtElem(6, 0, pair.disc)
    assert str(elem) == "6"
    assert "sqrt" in str(QuadExtElem(0, 1, pair.disc))


def test_unknown_family_rejected():
    with pytest.raises(ValueError):
        make_root_pair("pell")
