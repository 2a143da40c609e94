"""Sign invariant D, isotopy class counts, and rotation witnesses."""

import itertools

import pytest
from morinlab.errors import WitnessError
from morinlab.forms import FormSpec, isotopy_form, normal_form, pi_rotation
from morinlab.isotopy import (apply_witness, d_invariant, isotopy_classify,
                              isotopy_witness)
from morinlab.linalg import rat_det


def budget_specs(extras=(0,)):
    for r in range(1, 5):
        for a in range(1, 4):
            for extra in extras:
                if r * (a + 1) + extra <= 8:
                    for e1, e2 in itertools.product((1, -1), repeat=2):
                        yield FormSpec(r, a, extra, e1, e2)


def test_d_on_two_sign_representatives():
    for spec in budget_specs():
        d = d_invariant(isotopy_form(spec), spec.r)
        expected = (spec.eps1 ** ((spec.a + 1) * spec.r + 1)) * (spec.eps2 ** spec.r)
        assert d == expected, spec


def test_d_rejects_suspension():
    f = normal_form(FormSpec(2, 1, extra=1))
    with pytest.raises(WitnessError):
        d_invariant(f, 2)


def test_d_rejects_wrong_depth():
    f = normal_form(FormSpec(2, 1), order=5)
    with pytest.raises(WitnessError):
        d_invariant(f, 1)  # eta Lambda(0) = 0, so the determinant vanishes


# class counts and surviving sign, frozen per residue of r mod 4:
# r % 4 == 0        -> always two classes, eps1 survives
# r % 4 == 1, a even -> two classes, eps2 survives
# r % 4 == 2, a odd  -> two classes, eps1 survives
# r % 4 == 3        -> always one class
EXPECTED_TABLE = {}
for _r in range(1, 9):
    for _a in range(1, 5):
        if _r % 4 == 0:
            EXPECTED_TABLE[(_r, _a)] = (2, "eps1")
        elif _r % 4 == 1:
            EXPECTED_TABLE[(_r, _a)] = (2, "eps2") if _a % 2 == 0 else (1, "none")
        elif _r % 4 == 2:
            EXPECTED_TABLE[(_r, _a)] = (2, "eps1") if _a % 2 == 1 else (1, "none")
        else:
            EXPECTED_TABLE[(_r, _a)] = (1, "none")


def test_class_count_table():
    for (r, a), (count, label) in EXPECTED_TABLE.items():
        rep = isotopy_classify(r, a)
        assert (rep.class_count, rep.invariant_label) == (count, label), (r, a)
        assert rep.case_id == r % 4


def test_suspension_always_one_class():
    for r in range(1, 9):
        for a in range(1, 5):
            rep = isotopy_classify(r, a, suspension=True)
            assert rep.class_count == 1 and rep.invariant_label == "none"


def test_witnesses_reduce_exactly():
    for spec in budget_specs(extras=(0, 1)):
        w = isotopy_witness(spec)
        assert apply_witness(isotopy_form(spec), w) == isotopy_form(w.representative)


def test_witness_rotations_are_orientation_preserving():
    for spec in budget_specs(extras=(0, 1)):
        w = isotopy_witness(spec)
        for idx in w.source_sets:
            assert len(idx) % 2 == 0
            rho = pi_rotation(spec.m, idx, order=1)
            assert rat_det(rho.jacobian_at_origin()) == 1
        for idx in w.target_sets:
            assert len(idx) % 2 == 0
            rho = pi_rotation(spec.n, idx, order=1)
            assert rat_det(rho.jacobian_at_origin()) == 1


def test_witness_reaches_minimal_representative():
    for spec in budget_specs(extras=(0, 1)):
        w = isotopy_witness(spec)
        rep = w.representative
        info = isotopy_classify(spec.r, spec.a, suspension=spec.suspension)
        if info.class_count == 1:
            assert (rep.eps1, rep.eps2) == (1, 1), spec
        else:
            surviving = rep.eps1 if info.invariant_label == "eps1" else rep.eps2
            original = spec.eps1 if info.invariant_label == "eps1" else spec.eps2
            other = rep.eps2 if info.invariant_label == "eps1" else rep.eps1
            assert surviving == original and other == 1, spec


def test_trivial_witness_is_empty():
    w = isotopy_witness(FormSpec(2, 1))
    assert w.source_sets == () and w.target_sets == ()
    f = isotopy_form(FormSpec(2, 1))
    assert apply_witness(f, w) == f


def test_d_separates_classes_where_predicted():
    # when two classes exist, the two signs of the surviving parameter
    # give different D; when one class exists, the witness merges them
    for r, a in [(1, 2), (2, 1), (4, 1)]:
        info = isotopy_classify(r, a)
        assert info.class_count == 2
        if info.invariant_label == "eps1":
            f_plus = isotopy_form(FormSpec(r, a, eps1=1))
            f_minus = isotopy_form(FormSpec(r, a, eps1=-1))
        else:
            f_plus = isotopy_form(FormSpec(r, a, eps2=1))
            f_minus = isotopy_form(FormSpec(r, a, eps2=-1))
        assert d_invariant(f_plus, r) != d_invariant(f_minus, r)
