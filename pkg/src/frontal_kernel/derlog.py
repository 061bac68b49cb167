"""Logarithmic vector fields, the Euler-type splitting, and Saito's test."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .basis import (DEFAULT_LIMITS, Limits, membership, membership_certificate,
                    std, syzygies)
from .germs import poly_det
from .ring import Poly, Ring, associates, quasihomogeneous_weights


class DerlogError(RuntimeError):
    """A logarithmic-derivation computation failed a precondition."""


@dataclass(frozen=True)
class LogField:
    """A vector field xi = sum coeffs_i d/dy_i with xi(g) = cofactor * g."""

    coeffs: tuple[Poly, ...]
    cofactor: Poly

    def apply(self, g: Poly) -> Poly:
        out = g.ring.zero()
        for i, c in enumerate(self.coeffs):
            out = out + c * g.diff(i)
        return out

    def verify(self, g: Poly) -> bool:
        return self.apply(g) == self.cofactor * g


@dataclass(frozen=True)
class LogDerivations:
    ring: Ring
    g: Poly
    generators: tuple[LogField, ...]   # minimal generating set
    epsilon: Optional[tuple[Poly, tuple[Poly, ...]]] = None
    # epsilon = (unit, coeffs): the field (1/unit) * sum coeffs_i d/dy_i
    # satisfies epsilon(g) = g; present iff g is in J(g).


def _raw_syzygy_fields(g: Poly, limits: Limits) -> list[LogField]:
    ring_ = g.ring
    m = ring_.arity
    partials = [g.diff(i) for i in range(m)]
    live = [i for i in range(m) if not partials[i].is_zero()]
    fields: list[LogField] = []
    for i in range(m):
        if i not in live:
            unit = tuple(ring_.one() if j == i else ring_.zero() for j in range(m))
            fields.append(LogField(unit, ring_.zero()))
    syz = syzygies([partials[i] for i in live] + [g], limits)
    for v in syz:
        coeffs = [ring_.zero()] * m
        for pos, i in enumerate(live):
            coeffs[i] = v[pos]
        fields.append(LogField(tuple(coeffs), -v[-1]))
    return [f for f in fields if any(not c.is_zero() for c in f.coeffs)]


def _prune_minimal(fields: list[LogField], limits: Limits) -> list[LogField]:
    """Drop generators lying in the submodule spanned by the rest (Nakayama)."""
    current = list(fields)
    changed = True
    while changed and len(current) > 1:
        changed = False
        # prefer removing the highest-order fields first
        order = sorted(range(len(current)),
                       key=lambda i: -min(c.order() for c in current[i].coeffs
                                          if not c.is_zero()))
        for i in order:
            others = current[:i] + current[i + 1:]
            basis = std([f.coeffs for f in others], limits=limits)
            if membership(current[i].coeffs, basis, limits):
                current = others
                changed = True
                break
    return current


def derlog(g: Poly, limits: Limits = DEFAULT_LIMITS) -> LogDerivations:
    """Minimal generators of Der(-log V(g)) = {xi : xi(g) in (g)}."""
    if g.is_zero():
        raise DerlogError("zero polynomial defines no divisor")
    ring_ = g.ring
    if ring_.ordering.is_global():
        raise DerlogError("logarithmic derivations are computed in local rings")
    fields = _raw_syzygy_fields(g, limits)
    if not fields:
        raise DerlogError("no logarithmic fields found (is g a unit?)")
    minimal = _prune_minimal(fields, limits)
    for f in minimal:
        if not f.verify(g):
            raise AssertionError("unsound logarithmic-field certificate")
    eps = _epsilon(g, limits)
    return LogDerivations(ring_, g, tuple(minimal), eps)


def _epsilon(g: Poly, limits: Limits):
    ring_ = g.ring
    qh = quasihomogeneous_weights(g)
    if qh is not None:
        w, d, _ = qh
        coeffs = tuple(ring_.var(i).scale(Fraction(wi, d))
                       for i, wi in enumerate(w))
        return ring_.one(), coeffs
    cert = membership_certificate(g, [g.diff(i) for i in range(ring_.arity)],
                                  limits)
    if cert is None:
        return None
    u, cof = cert
    return u, tuple(cof)


def epsilon_split(g: Poly, limits: Limits = DEFAULT_LIMITS):
    """(epsilon, kernel generators) with Der(-log X) = (eps) + Der(-log g).

    epsilon is returned as (unit, coeffs), meaning (1/unit) sum coeffs d/dy_i;
    its evaluation on g equals g.  The kernel part consists of the fields
    annihilating g.
    """
    if g.is_zero():
        raise DerlogError("zero polynomial defines no divisor")
    eps = _epsilon(g, limits)
    if eps is None:
        raise DerlogError("g is not in its Jacobian ideal: no Euler-type "
                          "splitting exists")
    ring_ = g.ring
    m = ring_.arity
    partials = [g.diff(i) for i in range(m)]
    live = [i for i in range(m) if not partials[i].is_zero()]
    kernel: list[LogField] = []
    for i in range(m):
        if i not in live:
            unit = tuple(ring_.one() if j == i else ring_.zero() for j in range(m))
            kernel.append(LogField(unit, ring_.zero()))
    if live:
        for v in syzygies([partials[i] for i in live], limits):
            coeffs = [ring_.zero()] * m
            for pos, i in enumerate(live):
                coeffs[i] = v[pos]
            kernel.append(LogField(tuple(coeffs), ring_.zero()))
    kernel = [f for f in kernel if any(not c.is_zero() for c in f.coeffs)]
    u, coeffs = eps
    check = ring_.zero()
    for c, p in zip(coeffs, partials):
        check = check + c * p
    if check != u * g:
        raise AssertionError("epsilon certificate is unsound")
    return eps, _prune_minimal(kernel, limits)


@dataclass(frozen=True)
class FreenessReport:
    free: bool
    generator_count: int
    determinant: Optional[Poly]
    note: str = ""


def is_free_divisor(g: Poly, limits: Limits = DEFAULT_LIMITS,
                    derivations: Optional[LogDerivations] = None) -> FreenessReport:
    """Saito's criterion on a minimal generating set of Der(-log V(g))."""
    if derivations is None:
        derivations = derlog(g, limits)
    gens = derivations.generators
    m = g.ring.arity
    if len(gens) != m:
        note = (f"rank>{m}: {len(gens)} minimal generators"
                if len(gens) > m else
                f"only {len(gens)} generators for ambient rank {m}")
        return FreenessReport(False, len(gens), None, note)
    matrix = [list(f.coeffs) for f in gens]
    det = poly_det(matrix)
    if det.is_zero():
        return FreenessReport(False, m, det, "singular Saito matrix")
    if associates(det.monic(), g.monic()):
        return FreenessReport(True, m, det)
    return FreenessReport(False, m, det,
                          "Saito determinant is not a unit multiple of g")


def commutator(a: LogField, b: LogField) -> tuple[Poly, ...]:
    """Coefficients of [a, b] (no cofactor attached)."""
    ring_ = a.coeffs[0].ring
    m = ring_.arity
    out = []
    for i in range(m):
        acc = ring_.zero()
        for j in range(m):
            acc = acc + a.coeffs[j] * b.coeffs[i].diff(j)
            acc = acc - b.coeffs[j] * a.coeffs[i].diff(j)
        out.append(acc)
    return tuple(out)


def is_logarithmic(g: Poly, coeffs: Sequence[Poly],
                   limits: Limits = DEFAULT_LIMITS) -> bool:
    """Check xi(g) in (g) for the field with the given coefficients."""
    val = g.ring.zero()
    for i, c in enumerate(coeffs):
        val = val + c * g.diff(i)
    if val.is_zero():
        return True
    return membership(val, std([g], limits=limits), limits)
