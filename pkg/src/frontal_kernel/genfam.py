"""Generating families of wave fronts and their discriminants."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .basis import DEFAULT_LIMITS, Limits, eliminate, membership, std
from .germs import (DivisionError, GermError, MapGerm, NashData,
                    PrenormalForm, corank_branch, frontal_lift,
                    mu_y_determinant_at_zero, target_names)
from .invariants import ImageData, InvariantError, _branch_eliminant, image_equation
from .ring import Poly, Ring, associates, ring
from .squarefree import squarefree_part


class GenFamError(RuntimeError):
    """Generating-family construction failed a precondition."""


@dataclass(frozen=True)
class GeneratingFamily:
    """A family h(u, x, y) = (x, u, h') whose discriminant is the front.

    Variables are ordered x-block, y-block (inherited from the prenormal
    form), then the new unfolding block u.  h' = q + sum mu_i (u_i - p_i).
    """

    ring: Ring                    # local: x_1..x_{n-k}, y_1..y_k, u_1..u_k
    n: int
    k: int
    components: tuple[Poly, ...]  # x-block, u-block, h'
    hprime: Poly
    p: tuple[Poly, ...]           # the p-block of the prenormal form, lifted
    exact: bool
    jet_order: Optional[int]

    def source_arity(self) -> int:
        return self.n + self.k

    def restricted_components(self) -> list[Poly]:
        """h with u = p(x, y) substituted: must reproduce (x, p, q)."""
        r = self.ring
        nk = self.n - self.k
        images = [r.var(i) for i in range(self.n)] + list(self.p)
        return [c.substitute(images, r) for c in self.components]


def _u_names(k: int, taken) -> tuple[str, ...]:
    if k == 1 and "u" not in taken:
        return ("u",)
    names = []
    i = 1
    for _ in range(k):
        while f"u{i}" in taken:
            i += 1
        names.append(f"u{i}")
        i += 1
    return tuple(names)


def generating_family(pre: PrenormalForm, nash: NashData) -> GeneratingFamily:
    """h(u,x,y) = (x, u, q + sum mu_i (u_i - p_i)) from the lift data."""
    if mu_y_determinant_at_zero(pre, nash) == 0:
        raise GenFamError("d(mu)/dy is singular at the origin: the germ is "
                          "frontal but not a wave front")
    n, k = pre.n, pre.k
    unames = _u_names(k, set(pre.source.names))
    big = ring(*pre.source.names, *unames, local=True)
    uvars = [big.var(n + i) for i in range(k)]
    p = tuple(pj.map_to(big) for pj in pre.p)
    q = pre.q.map_to(big)
    mu = [m.map_to(big) for m in nash.mu]
    hprime = q
    for m, pj, u in zip(mu, p, uvars):
        hprime = hprime + m * (u - pj)
    xs = [big.var(i) for i in range(n - k)]
    comps = tuple(xs) + tuple(uvars) + (hprime,)
    return GeneratingFamily(big, n, k, comps, hprime, p,
                            nash.exact, nash.jet_order)


def generating_family_of(f: MapGerm, branch: int = 0,
                         jet_order: int = 12) -> GeneratingFamily:
    """Generating family of a wave-front branch; immersions short-circuit."""
    comps = f.branches[branch]
    if corank_branch(comps) == 0:
        src = comps[0].ring
        return GeneratingFamily(src, f.n, 0, tuple(comps),
                                comps[-1], (), True, None)
    pre, nash = frontal_lift(f, branch, jet_order)
    return generating_family(pre, nash)


def critical_set_certificate(fam: GeneratingFamily,
                             limits: Limits = DEFAULT_LIMITS) -> bool:
    """The critical ideal <dh'/dy_j> equals the graph ideal <u_i - p_i>."""
    if fam.k == 0:
        return True
    r = fam.ring
    n, k = fam.n, fam.k
    crit = [fam.hprime.diff(n - k + j) for j in range(k)]
    graph = [r.var(n + i) - fam.p[i] for i in range(k)]
    crit = [c for c in crit if not c.is_zero()]
    if not crit:
        return False
    cb = std(crit, limits=limits)
    gb = std(graph, limits=limits)
    return (all(membership(g, cb, limits) for g in graph)
            and all(membership(c, gb, limits) for c in crit))


def discriminant(fam: GeneratingFamily,
                 limits: Limits = DEFAULT_LIMITS) -> ImageData:
    """Critical values of h: eliminate all source variables from the
    graph-plus-critical ideal, then reduce to a squarefree equation."""
    r = fam.ring
    n, k = fam.n, fam.k
    tnames = target_names(n + 1)
    target = ring(*tnames, local=True)
    if k == 0:
        return image_equation(MapGerm(r, (fam.components,)), limits)
    big = ring(*r.names, *tnames)
    graph = [big.var(r.arity + j) - c.map_to(big)
             for j, c in enumerate(fam.components)]
    crit = [fam.hprime.diff(n - k + j).map_to(big) for j in range(k)]
    crit = [c for c in crit if not c.is_zero()]
    sub, gens = eliminate(graph + crit, range(r.arity), limits)
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise GenFamError("discriminant eliminant is zero")
    if len(gens) > 1:
        raise GenFamError("discriminant is not a hypersurface: "
                          f"{len(gens)} generators")
    reduced = squarefree_part(gens[0].map_to(target)).monic()
    return ImageData(target, reduced)


def verify_discriminant_equals_image(f: MapGerm, fam: GeneratingFamily,
                                     limits: Limits = DEFAULT_LIMITS) -> bool:
    """Mutual divisibility of the reduced image and discriminant equations."""
    img = image_equation(f, limits)
    disc = discriminant(fam, limits)
    return associates(img.equation, disc.equation.map_to(img.ring))
