"""Image equations, Milnor numbers, Siersma counts, Jacobian modules."""

import pytest

from frontal_kernel import (INFINITE, InvariantError, M_F_dimension, associates,
                            conductor_colength, frontal_codimension,
                            frontal_milnor_siersma, good_equation, germ,
                            hat_M_dimension, image_equation, milnor_number,
                            piene_lambda, plane_curve_invariants, ring,
                            samuel_multiplicity_estimate, siersma_count,
                            unfolding)


def test_image_equation_e6(e6):
    img = image_equation(e6)
    R = img.ring
    y1, y2 = R.var(0), R.var(1)
    assert img.equation == y2 ** 3 - y1 ** 4


def test_image_equation_cuspidal_edge(cuspidal_edge):
    img = image_equation(cuspidal_edge)
    R = img.ring
    Y, Z = R.var(1), R.var(2)
    assert img.equation == Z ** 2 - Y ** 3


def test_image_equation_folded_umbrella(folded_umbrella):
    img = image_equation(folded_umbrella)
    R = img.ring
    X, Y, Z = R.var(0), R.var(1), R.var(2)
    assert img.equation == Z ** 2 - X ** 2 * Y ** 3


def test_image_equation_multigerm_dedup():
    # two branches with the same image produce one reduced factor
    from frontal_kernel import multigerm
    R = ring("x", local=True)
    x = R.var(0)
    f = multigerm(R, [x ** 2, x ** 3], [x ** 2, -(x ** 3)])
    img = image_equation(f)
    y1, y2 = img.ring.var(0), img.ring.var(1)
    # the image is the union: (y2^2 - y1^3) for each branch, but the two
    # branches differ, so the product of the distinct reduced factors appears
    pulled = img.equation.substitute([x ** 2, x ** 3], R)
    assert pulled.is_zero()


def test_milnor_numbers(e6, cusp):
    assert milnor_number(image_equation(e6).equation) == 6
    assert milnor_number(image_equation(cusp).equation) == 2
    R = ring("x", "y", local=True)
    assert milnor_number(R.var(0) ** 2) is INFINITE


def test_siersma_frontal_stabilisation(e6_unfolding):
    res = frontal_milnor_siersma(e6_unfolding)
    assert res.value == 1
    assert len(res.witnesses) == 2


def test_siersma_nonfrontal_stabilisation(e6_nonfrontal_unfolding):
    res = frontal_milnor_siersma(e6_nonfrontal_unfolding)
    assert res.value == 3


def test_siersma_single_values(e6_unfolding):
    assert siersma_count(e6_unfolding, 1) == 1
    assert siersma_count(e6_unfolding, 2) == 1


def test_siersma_trivial_unfolding(cuspidal_edge):
    R = ring("x", "y", "t", local=True)
    x, y = R.var(0), R.var(1)
    U = unfolding(cuspidal_edge, ["t"], [x, y ** 2, y ** 3])
    assert frontal_milnor_siersma(U).value == 0


def test_good_equation_certificate(e6_unfolding, cusp_unfolding):
    for U in (e6_unfolding, cusp_unfolding):
        ge = good_equation(U)
        assert ge.verify_certificate()
        assert not ge.augmented


def test_good_equation_restriction(e6_unfolding):
    ge = good_equation(e6_unfolding)
    R = ge.ring
    images = [R.var(i) for i in range(ge.y_count)] + \
             [R.const(0)] * (R.arity - ge.y_count)
    restricted = ge.G.substitute(images, R)
    assert associates(restricted.map_to(ge.base_equation.ring),
                      ge.base_equation)


def test_M_F_and_codim(e6_unfolding, cusp_unfolding):
    ge6 = good_equation(e6_unfolding)
    assert M_F_dimension(ge6) == 1
    assert frontal_codimension(ge6) == 1
    gcu = good_equation(cusp_unfolding)
    assert M_F_dimension(gcu) == 0
    assert frontal_codimension(gcu) == 0


def test_codim_le_M_F(e6_unfolding, cusp_unfolding):
    for U in (e6_unfolding, cusp_unfolding):
        ge = good_equation(U)
        assert frontal_codimension(ge) <= M_F_dimension(ge)


def test_M_F_infinite():
    R = ring("x", "y", local=True)
    x, y = R.var(0), R.var(1)
    base = germ(R, x, y ** 2, y ** 7 + x ** 7 * y ** 5)
    S = ring("x", "y", "t", local=True)
    xs, ys, ts = S.var(0), S.var(1), S.var(2)
    U = unfolding(base, ["t"],
                  [xs, ys ** 2, ys ** 7 + xs ** 7 * ys ** 5 + ts * ys ** 3])
    ge = good_equation(U)
    assert M_F_dimension(ge) is INFINITE
    assert frontal_codimension(ge) is INFINITE


def test_samuel_equals_siersma(e6_unfolding, cusp_unfolding):
    for U in (e6_unfolding, cusp_unfolding):
        ge = good_equation(U)
        est = samuel_multiplicity_estimate(ge)
        assert est.window is not None and len(est.window) == 3
        assert est.value == frontal_milnor_siersma(U).value


def test_hat_M(cuspidal_edge, folded_umbrella, e6):
    assert hat_M_dimension(cuspidal_edge) == 0
    assert hat_M_dimension(folded_umbrella) == 1
    assert hat_M_dimension(e6) == 1


def test_piene_lambda_and_conductor(cuspidal_edge, e6):
    lam = piene_lambda(cuspidal_edge)
    y = cuspidal_edge.source.var(1)
    assert associates(lam, y ** 2)
    assert conductor_colength(lam) is INFINITE  # source has two variables
    lam6 = piene_lambda(e6)
    x = e6.source.var(0)
    assert associates(lam6, x ** 6)
    assert conductor_colength(lam6) == 6


def test_conductor_colength_is_two_delta(e6, cusp):
    for f in (e6, cusp):
        pc = plane_curve_invariants(f)
        lam = piene_lambda(f)
        assert conductor_colength(lam) == 2 * pc.delta


def test_plane_curve_chain_e6(e6):
    pc = plane_curve_invariants(e6)
    assert (pc.mu, pc.delta, pc.mult) == (6, 3, 3)
    assert pc.mu_image == 3
    assert pc.mu_frontal == 1
    assert pc.codim_ae == 3
    assert pc.codim_fe == 1


def test_plane_curve_chain_cusp(cusp):
    pc = plane_curve_invariants(cusp)
    assert (pc.mu, pc.delta, pc.mult) == (2, 1, 2)
    assert pc.mu_image == 1
    assert pc.mu_frontal == 0
    assert pc.codim_ae == 1
    assert pc.codim_fe == 0


def test_plane_curve_immersion():
    R = ring("x", local=True)
    x = R.var(0)
    f = germ(R, x, x ** 2)
    pc = plane_curve_invariants(f)
    assert (pc.mu, pc.delta, pc.mu_frontal, pc.codim_ae, pc.codim_fe) == \
        (0, 0, 0, 0, 0)


def test_unfolding_validation(e6):
    R = ring("x", "t", local=True)
    x, t = R.var(0), R.var(1)
    with pytest.raises(InvariantError):
        # restricting to t = 0 does not recover the base germ
        unfolding(e6, ["t"], [x ** 3 + x, x ** 4])
