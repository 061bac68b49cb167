"""Squarefree reduction of exact-rational polynomials.

Multivariate gcd is delegated to sympy (subresultant machinery over Q);
everything else stays in the native representation.
"""

from __future__ import annotations

from fractions import Fraction

import sympy

from .ring import Poly, Ring, exact_divide


def _to_sympy(p: Poly, symbols):
    expr = sympy.Integer(0)
    for e, c in p.terms:
        term = sympy.Rational(c.numerator, c.denominator)
        for s, a in zip(symbols, e):
            if a:
                term *= s ** a
        expr += term
    return expr


def _from_sympy(expr, ring: Ring, symbols) -> Poly:
    poly = sympy.Poly(expr, *symbols, domain="QQ")
    terms = []
    for exp, coeff in poly.terms():
        q = sympy.Rational(coeff)
        terms.append((tuple(int(a) for a in exp), Fraction(int(q.p), int(q.q))))
    return ring.from_terms(terms)


def gcd(p: Poly, q: Poly) -> Poly:
    symbols = sympy.symbols(p.ring.names)
    if len(p.ring.names) == 1:
        symbols = (symbols[0],) if not isinstance(symbols, tuple) else symbols
    g = sympy.gcd(_to_sympy(p, symbols), _to_sympy(q, symbols))
    return _from_sympy(g, p.ring, symbols)


def squarefree_part(p: Poly) -> Poly:
    """p divided by its repeated factors (monic leading coefficient kept)."""
    if p.is_zero():
        raise ValueError("squarefree part of 0")
    g = p
    for i in range(p.ring.arity):
        d = p.diff(i)
        if not d.is_zero():
            g = gcd(g, d)
    if g.is_constant():
        return p
    quotient = exact_divide(p, g)
    if quotient is None:
        raise AssertionError("gcd does not divide its argument")
    return quotient


def is_squarefree(p: Poly) -> bool:
    reduced = squarefree_part(p)
    return reduced.total_degree() == p.total_degree()
