"""Exact multivariate polynomial arithmetic over Q with local/global orderings."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence


class RingMismatchError(ValueError):
    """Operands live in different rings."""


# ---------------------------------------------------------------------------
# Monomial orderings
#
# An ordering is encoded by a key function exp -> tuple; larger key means
# larger monomial.  All keys are injective on exponent vectors, so every
# ordering here is total.

GLOBAL_DEGREVLEX = "degrevlex"
LOCAL_DS = "ds"  # antigraded reverse lexicographic


@dataclass(frozen=True)
class Ordering:
    """Monomial ordering: (weighted-)degree first, ties by reverse lex.

    ``local`` flips the degree comparison so that 1 beats every variable.
    ``blocks`` optionally splits the exponent vector into segments compared
    left to right (used for elimination and position-over-term tricks).
    """

    local: bool = False
    weights: Optional[tuple[Fraction, ...]] = None
    blocks: Optional[tuple["Ordering", ...]] = None
    block_sizes: Optional[tuple[int, ...]] = None

    def key(self, exp: tuple[int, ...]):
        if self.blocks is not None:
            parts = []
            i = 0
            for size, ordering in zip(self.block_sizes, self.blocks):
                parts.append(ordering.key(exp[i:i + size]))
                i += size
            return tuple(parts)
        if self.weights is not None:
            deg = sum(w * e for w, e in zip(self.weights, exp))
        else:
            deg = sum(exp)
        if self.local:
            deg = -deg
        return (deg, tuple(-e for e in reversed(exp)))

    def is_global(self) -> bool:
        if self.blocks is not None:
            return all(o.is_global() for o in self.blocks)
        return not self.local


def block_ordering(sizes: Sequence[int], orderings: Sequence[Ordering]) -> Ordering:
    return Ordering(blocks=tuple(orderings), block_sizes=tuple(sizes))


# ---------------------------------------------------------------------------
# Rings


@dataclass(frozen=True)
class Ring:
    """A polynomial ring with named variables and a fixed monomial ordering.

    Weights, when given, are positive rationals used by the weighted degree
    and by weighted orderings; they default to 1 for each variable.
    """

    names: tuple[str, ...]
    ordering: Ordering = field(default_factory=Ordering)
    weights: Optional[tuple[Fraction, ...]] = None

    def __post_init__(self):
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate variable names: {self.names}")
        if self.weights is not None and len(self.weights) != len(self.names):
            raise ValueError("weight vector length differs from arity")

    @property
    def arity(self) -> int:
        return len(self.names)

    def zero(self) -> "Poly":
        return Poly(self, ())

    def one(self) -> "Poly":
        return self.const(1)

    def const(self, c) -> "Poly":
        c = Fraction(c)
        if c == 0:
            return self.zero()
        return Poly(self, (((0,) * self.arity, c),))

    def var(self, i: int) -> "Poly":
        exp = tuple(1 if j == i else 0 for j in range(self.arity))
        return Poly(self, ((exp, Fraction(1)),))

    def gens(self) -> list["Poly"]:
        return [self.var(i) for i in range(self.arity)]

    def monomial(self, exp: Sequence[int], coeff=1) -> "Poly":
        coeff = Fraction(coeff)
        if coeff == 0:
            return self.zero()
        return Poly(self, ((tuple(exp), coeff),))

    def from_terms(self, terms: Iterable[tuple[tuple[int, ...], Fraction]]) -> "Poly":
        acc: dict[tuple[int, ...], Fraction] = {}
        for exp, c in terms:
            c0 = acc.get(exp)
            c = c if c0 is None else c0 + c
            if c:
                acc[exp] = c
            elif c0 is not None:
                del acc[exp]
        return self._from_dict(acc)

    def _from_dict(self, acc: dict[tuple[int, ...], Fraction]) -> "Poly":
        key = self.ordering.key
        terms = tuple(sorted(acc.items(), key=lambda t: key(t[0]), reverse=True))
        return Poly(self, terms)

    def weighted_degree(self, exp: tuple[int, ...]) -> Fraction:
        if self.weights is None:
            return Fraction(sum(exp))
        return sum(w * e for w, e in zip(self.weights, exp))

    def index(self, name: str) -> int:
        return self.names.index(name)

    def with_ordering(self, ordering: Ordering) -> "Ring":
        return Ring(self.names, ordering, self.weights)


def ring(*names: str, local: bool = False, weights=None) -> Ring:
    w = None if weights is None else tuple(Fraction(x) for x in weights)
    ordering = Ordering(local=local, weights=w)
    return Ring(tuple(names), ordering, w)


# ---------------------------------------------------------------------------
# Polynomials


class Poly:
    """Immutable polynomial: term list sorted decreasingly in the ring order."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms: tuple):
        self.ring = ring
        self.terms = terms

    # -- basic queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e, _ in self.terms)

    def is_unit(self) -> bool:
        """Invertible in the local ring: nonzero constant term."""
        return self.constant_term() != 0

    def constant_term(self) -> Fraction:
        zero = (0,) * self.ring.arity
        for e, c in self.terms:
            if e == zero:
                return c
        return Fraction(0)

    def leading_term(self) -> tuple[tuple[int, ...], Fraction]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return self.terms[0]

    def leading_exp(self) -> tuple[int, ...]:
        return self.leading_term()[0]

    def leading_coeff(self) -> Fraction:
        return self.leading_term()[1]

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e, _ in self.terms)

    def order(self) -> int:
        """Minimal total degree of a term (the order of the germ)."""
        if not self.terms:
            raise ValueError("zero polynomial has no order")
        return min(sum(e) for e, _ in self.terms)

    def ecart(self) -> int:
        return self.total_degree() - sum(self.leading_exp())

    def coeff(self, exp: tuple[int, ...]) -> Fraction:
        for e, c in self.terms:
            if e == exp:
                return c
        return Fraction(0)

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        lc = self.leading_coeff()
        if lc == 1:
            return self
        return Poly(self.ring, tuple((e, c / lc) for e, c in self.terms))

    def variables(self) -> set[int]:
        used: set[int] = set()
        for e, _ in self.terms:
            for i, a in enumerate(e):
                if a:
                    used.add(i)
        return used

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.ring is not self.ring and other.ring != self.ring:
                raise RingMismatchError(
                    f"rings differ: {self.ring.names} vs {other.ring.names}")
            return other
        return self.ring.const(other)

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        acc = dict(self.terms)
        for e, c in other.terms:
            c0 = acc.get(e)
            c = c if c0 is None else c0 + c
            if c:
                acc[e] = c
            elif c0 is not None:
                del acc[e]
        return self.ring._from_dict(acc)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(self.ring, tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other) -> "Poly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Poly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Poly":
        other = self._coerce(other)
        acc: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                c0 = acc.get(e)
                c = c if c0 is None else c0 + c
                if c:
                    acc[e] = c
                elif c0 is not None:
                    del acc[e]
        return self.ring._from_dict(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative exponent")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n >> 1
            if base_needed:
                base = base * base
            n = base_needed
        return result

    def scale(self, c) -> "Poly":
        c = Fraction(c)
        if c == 0:
            return self.ring.zero()
        return Poly(self.ring, tuple((e, k * c) for e, k in self.terms))

    def mul_term(self, exp: tuple[int, ...], coeff: Fraction) -> "Poly":
        if coeff == 0:
            return self.ring.zero()
        terms = tuple((tuple(a + b for a, b in zip(e, exp)), c * coeff)
                      for e, c in self.terms)
        # multiplying by a monomial preserves the term order
        return Poly(self.ring, terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.ring == other.ring and dict(self.terms) == dict(other.terms)
        if isinstance(other, (int, Fraction)):
            return self == self.ring.const(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ring.names, frozenset(self.terms)))

    # -- calculus and structure --------------------------------------------

    def diff(self, var: int) -> "Poly":
        if not 0 <= var < self.ring.arity:
            raise IndexError(f"no variable with index {var}")
        acc = {}
        for e, c in self.terms:
            a = e[var]
            if a == 0:
                continue
            e2 = e[:var] + (a - 1,) + e[var + 1:]
            acc[e2] = acc.get(e2, Fraction(0)) + c * a
        return self.ring._from_dict({e: c for e, c in acc.items() if c})

    def substitute(self, images: Sequence["Poly"], target: Optional[Ring] = None) -> "Poly":
        """Evaluate self at the given images (one per variable)."""
        if len(images) != self.ring.arity:
            raise ValueError("one image per variable required")
        if target is None:
            if not images:
                raise ValueError("target ring required for 0-ary substitution")
            target = images[0].ring
        images = [img if isinstance(img, Poly) else target.const(img) for img in images]
        powers: list[dict[int, Poly]] = [{0: target.one()} for _ in images]

        def power(i: int, a: int) -> Poly:
            cache = powers[i]
            if a not in cache:
                cache[a] = power(i, a - 1) * images[i]
            return cache[a]

        result = target.zero()
        for e, c in self.terms:
            term = target.const(c)
            for i, a in enumerate(e):
                if a:
                    term = term * power(i, a)
            result = result + term
        return result

    def jet(self, d, weighted: bool = False) -> "Poly":
        """Truncate to terms of (weighted) total degree <= d."""
        if weighted:
            deg = self.ring.weighted_degree
        else:
            deg = sum
        return Poly(self.ring, tuple(t for t in self.terms if deg(t[0]) <= d))

    def weighted_degree(self) -> Fraction:
        if not self.terms:
            return Fraction(-1)
        return max(self.ring.weighted_degree(e) for e, _ in self.terms)

    def map_to(self, other: Ring) -> "Poly":
        """Reinterpret in a ring with the same variable names (any order/ordering)."""
        idx = [other.names.index(n) if n in other.names else -1
               for n in self.ring.names]
        acc = {}
        for e, c in self.terms:
            e2 = [0] * other.arity
            for i, a in enumerate(e):
                if a:
                    if idx[i] < 0:
                        raise ValueError(
                            f"variable {self.ring.names[i]} absent from target ring")
                    e2[idx[i]] = a
            acc[tuple(e2)] = c
        return other._from_dict(acc)

    # -- display ------------------------------------------------------------

    def __repr__(self) -> str:
        return f"Poly({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.terms:
            factors = []
            for name, a in zip(self.ring.names, e):
                if a == 1:
                    factors.append(name)
                elif a > 1:
                    factors.append(f"{name}^{a}")
            body = "*".join(factors)
            if not body:
                chunk = str(c)
            elif c == 1:
                chunk = body
            elif c == -1:
                chunk = f"-{body}"
            else:
                chunk = f"{c}*{body}"
            parts.append(chunk)
        out = parts[0]
        for chunk in parts[1:]:
            out += f" - {chunk[1:]}" if chunk.startswith("-") else f" + {chunk}"
        return out


# ---------------------------------------------------------------------------
# Exact division and quasihomogeneity


def exact_divide(p: Poly, q: Poly) -> Optional[Poly]:
    """Return p/q when q divides p exactly as polynomials, else None."""
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    ring_ = p.ring
    if not ring_.ordering.is_global():
        # division with leading terms needs a global order; reinterpret
        glob = Ring(ring_.names, Ordering())
        quotient = exact_divide(p.map_to(glob), q.map_to(glob))
        return None if quotient is None else quotient.map_to(ring_)
    quotient = ring_.zero()
    qe, qc = q.leading_term()
    while not p.is_zero():
        pe, pc = p.leading_term()
        diff = tuple(a - b for a, b in zip(pe, qe))
        if any(d < 0 for d in diff):
            return None
        t = ring_.monomial(diff, pc / qc)
        quotient = quotient + t
        p = p - t * q
    return quotient


def divides_up_to_unit(p: Poly, q: Poly) -> bool:
    """True when p = u*q with u a local unit (both directions checked by caller)."""
    quotient = exact_divide(p, q)
    return quotient is not None and quotient.is_unit()


def associates(p: Poly, q: Poly) -> bool:
    """Mutual divisibility: each divides the other exactly."""
    if p.is_zero() or q.is_zero():
        return p.is_zero() and q.is_zero()
    return exact_divide(p, q) is not None and exact_divide(q, p) is not None


def quasihomogeneous_weights(p: Poly):
    """Positive integer weights w and degree d with w.a = d for every term.

    Returns (weights, degree, free_mask) or None.  Variables absent from p
    get weight 1 and are flagged free; an underdetermined system among the
    present variables is completed with small positive values when possible.
    """
    if p.is_zero():
        raise ValueError("quasihomogeneity is undefined for 0")
    n = p.ring.arity
    exps = [e for e, _ in p.terms]
    present = sorted(p.variables())
    absent = [i for i in range(n) if i not in present]
    if not present:
        return None  # nonzero constant: w.a = d > 0 impossible
    m = len(present)
    base = exps[0]
    rows = [[Fraction(e[i] - base[i]) for i in present] for e in exps[1:]]
    # solve rows . w = 0 by Gaussian elimination
    pivots: dict[int, list[Fraction]] = {}
    for row in rows:
        for col, piv in pivots.items():
            if row[col]:
                f = row[col]
                row[:] = [a - f * b for a, b in zip(row, piv)]
        lead = next((j for j, a in enumerate(row) if a), None)
        if lead is None:
            continue
        row[:] = [a / row[lead] for a in row]
        pivots[lead] = row
    free_cols = [j for j in range(m) if j not in pivots]

    def solution(free_values):
        w = [Fraction(0)] * m
        for j, v in zip(free_cols, free_values):
            w[j] = Fraction(v)
        for col, row in pivots.items():
            w[col] = -sum(row[j] * w[j] for j in free_cols)
        return w

    w = None
    for trial in itertools.product(range(1, 7), repeat=len(free_cols)):
        cand = solution(trial)
        if all(v > 0 for v in cand):
            w = cand
            break
    if w is None:
        return None
    scale = 1
    for v in w:
        scale = scale * v.denominator // _gcd_int(scale, v.denominator)
    scaled = [int(v * scale) for v in w]
    g = 0
    for v in scaled:
        g = _gcd_int(g, v)
    scaled = [v // g for v in scaled]
    ints = [1] * n
    for j, i in enumerate(present):
        ints[i] = scaled[j]
    d = sum(wi * ai for wi, ai in zip(ints, base))
    # re-check every term
    for e in exps:
        if sum(wi * ai for wi, ai in zip(ints, e)) != d:
            return None
    free_mask = tuple(i in absent for i in range(n))
    return tuple(ints), d, free_mask


def _gcd_int(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a
