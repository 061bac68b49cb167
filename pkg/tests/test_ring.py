"""Exact polynomial arithmetic and orderings."""

from fractions import Fraction

import pytest

from frontal_kernel import Poly, associates, exact_divide, quasihomogeneous_weights, ring
from frontal_kernel.germfile import _ExprParser, tokenize


def parse_poly(text, R):
    return _ExprParser(tokenize(text + ";"), 0, R).parse_expr()


def test_basic_arithmetic():
    R = ring("x", "y")
    x, y = R.var(0), R.var(1)
    p = (x + y) ** 2
    assert p == x ** 2 + x * y.scale(2) + y ** 2
    assert (p - p).is_zero()
    assert (x * y) * R.const(Fraction(1, 2)) == (x * y).scale(Fraction(1, 2))
    assert (-x) + x == R.zero()


def test_leading_term_global_vs_local():
    # global degrevlex picks the highest degree, local ds the lowest
    Rg = ring("x")
    Rl = ring("x", local=True)
    x = Rg.var(0)
    p = x + x ** 3
    assert p.leading_exp() == (3,)
    xl = Rl.var(0)
    pl = xl + xl ** 3
    assert pl.leading_exp() == (1,)
    assert pl.order() == 1
    assert pl.ecart() == 2


def test_diff_and_substitute():
    R = ring("x", "y")
    x, y = R.var(0), R.var(1)
    p = x ** 3 * y + y ** 2
    assert p.diff(0) == (x ** 2 * y).scale(3)
    assert p.diff(1) == x ** 3 + y.scale(2)
    q = p.substitute([y, x], R)     # swap the variables
    assert q == y ** 3 * x + x ** 2


def test_jet_truncation():
    R = ring("x", local=True)
    x = R.var(0)
    p = x + x ** 2 + x ** 5
    assert p.jet(2) == x + x ** 2
    assert p.jet(10) == p


def test_map_to_between_rings():
    R = ring("x", "y", local=True)
    S = ring("y", "x", "z")
    p = R.var(0) ** 2 + R.var(1)
    q = p.map_to(S)
    assert q == S.var(1) ** 2 + S.var(0)
    with pytest.raises(Exception):
        p.map_to(ring("z", "w"))


def test_str_round_trip():
    R = ring("x", "y", local=True)
    x, y = R.var(0), R.var(1)
    p = (x ** 2 * y).scale(Fraction(3, 2)) - y ** 3 + x.scale(-1)
    again = parse_poly(str(p), R)
    assert again == p


def test_exact_divide():
    R = ring("x", "y", local=True)
    x, y = R.var(0), R.var(1)
    p = (x ** 2 - y ** 2) * (x + y ** 3)
    q = x + y ** 3
    assert exact_divide(p, q) == x ** 2 - y ** 2
    assert exact_divide(x ** 2 + y, x) is None


def test_associates():
    R = ring("x", local=True)
    x = R.var(0)
    assert associates(x ** 2, (x ** 2).scale(Fraction(-7, 3)))
    assert not associates(x ** 2, x ** 3)


def test_quasihomogeneous_weights():
    R = ring("y1", "y2", local=True)
    y1, y2 = R.var(0), R.var(1)
    g = y2 ** 3 - y1 ** 4
    qh = quasihomogeneous_weights(g)
    assert qh is not None
    w, d, _ = qh
    assert list(w) == [3, 4] and d == 12
    assert quasihomogeneous_weights(y1 ** 2 + y1 ** 3 + y2) is None


def test_weighted_ring_degree():
    R = ring("x", "y", weights=(2, 3))
    p = R.var(0) ** 3 + R.var(1) ** 2
    assert p.weighted_degree() == 6
