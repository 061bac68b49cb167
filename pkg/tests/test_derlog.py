"""Logarithmic vector fields and Saito's freeness test."""

import pytest

from frontal_kernel import (DerlogError, associates, derlog, epsilon_split,
                            image_equation, is_free_divisor, ring)
from frontal_kernel.derlog import commutator, is_logarithmic


def test_cuspidal_edge_image_is_free(cuspidal_edge):
    g = image_equation(cuspidal_edge).equation
    der = derlog(g)
    assert len(der.generators) == 3
    for field in der.generators:
        assert field.verify(g)
    report = is_free_divisor(g, derivations=der)
    assert report.free
    assert associates(report.determinant.monic(), g.monic())


def test_plane_cusp_is_free(cusp):
    g = image_equation(cusp).equation
    report = is_free_divisor(g)
    assert report.free
    assert report.generator_count == 2


def test_a1_cone_is_not_free():
    # an isolated surface singularity is never a free divisor
    R = ring("X", "Y", "Z", local=True)
    X, Y, Z = R.gens()
    g = X ** 2 + Y ** 2 + Z ** 2
    report = is_free_divisor(g)
    assert not report.free
    assert report.generator_count > 3


def test_fermat_cubic_is_not_free():
    R = ring("X", "Y", "Z", local=True)
    X, Y, Z = R.gens()
    report = is_free_divisor(X ** 3 + Y ** 3 + Z ** 3)
    assert not report.free


def test_swallowtail_discriminant_is_free(swallowtail):
    g = image_equation(swallowtail).equation
    report = is_free_divisor(g)
    assert report.free


def test_epsilon_split(cuspidal_edge):
    g = image_equation(cuspidal_edge).equation
    (unit, coeffs), kernel = epsilon_split(g)
    assert unit.is_unit()
    acc = g.ring.zero()
    for c in range(len(coeffs)):
        acc = acc + coeffs[c] * g.diff(c)
    assert acc == unit * g
    for field in kernel:
        assert field.apply(g).is_zero()


def test_commutator_is_logarithmic(cuspidal_edge):
    g = image_equation(cuspidal_edge).equation
    der = derlog(g)
    gens = der.generators
    for a in gens:
        for b in gens:
            assert is_logarithmic(g, commutator(a, b))


def test_normal_crossings_free():
    R = ring("X", "Y", local=True)
    X, Y = R.gens()
    report = is_free_divisor(X * Y)
    assert report.free


def test_derlog_requires_local_ring():
    R = ring("X", "Y")
    with pytest.raises(DerlogError):
        derlog(R.var(0) * R.var(1))
