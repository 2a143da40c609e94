"""Normal forms, rotations, and random diffeomorphism jets."""

import pytest
from morinlab.errors import DimensionError, ParityError
from morinlab.forms import (FormSpec, conjugate, identity_map, invert_diffeo,
                            isotopy_form, normal_form, pi_rotation,
                            random_diffeo)
from morinlab.linalg import identity, rat_det
from morinlab.maps import jet_compose


def test_spec_dimensions():
    spec = FormSpec(3, 2, extra=1)
    assert spec.m == 3 * 3 + 1 == 10
    assert spec.n == 12
    assert spec.suspension
    assert spec.min_order() == 5
    assert not FormSpec(3, 2).suspension


def test_spec_validation():
    with pytest.raises(DimensionError):
        FormSpec(0, 1)
    with pytest.raises(DimensionError):
        FormSpec(1, 1, eps1=2)
    with pytest.raises(DimensionError):
        normal_form(FormSpec(2, 1), order=3)


def test_isotopy_form_with_trivial_signs_is_normal_form():
    for spec in [FormSpec(1, 1), FormSpec(2, 2), FormSpec(3, 1, extra=2)]:
        assert isotopy_form(spec) == normal_form(spec)


def test_isotopy_form_sign_placement():
    f = isotopy_form(FormSpec(2, 1, eps1=-1, eps2=-1))
    g = normal_form(FormSpec(2, 1))
    m = 4
    # first component and the x1*x4 term flip with eps1, last with eps2
    assert f.components[0] == -g.components[0]
    diff = f.components[m - 1] - g.components[m - 1]
    assert str(diff) == "-2*x1*x4"
    assert f.components[-1] == -g.components[-1]


def test_pi_rotation():
    rho = pi_rotation(4, (1, 3), order=2)
    assert rat_det(rho.jacobian_at_origin()) == 1
    with pytest.raises(ParityError):
        pi_rotation(4, (2,))
    with pytest.raises(DimensionError):
        pi_rotation(4, (1, 5))
    assert pi_rotation(3, (), order=2) == identity_map(3, 2)


def test_random_diffeo_linear_part():
    for t in range(8):
        phi = random_diffeo(3, 2, seed=("t", t))
        L = phi.jacobian_at_origin()
        assert rat_det(L) > 0
    assert random_diffeo(3, 2, seed=1) == random_diffeo(3, 2, seed=1)
    assert random_diffeo(3, 2, seed=1) != random_diffeo(3, 2, seed=2)


def test_invert_diffeo():
    for t in range(6):
        phi = random_diffeo(3, 3, seed=("inv", t), order=4)
        psi = invert_diffeo(phi)
        assert jet_compose(phi, psi) == identity_map(3, 4)
        assert jet_compose(psi, phi) == identity_map(3, 4)


def test_conjugate_by_identities_is_trivial():
    f = normal_form(FormSpec(2, 1))
    phi = identity_map(f.source_dim, f.order)
    Phi = identity_map(f.target_dim, f.order)
    assert conjugate(f, phi, Phi) == f
