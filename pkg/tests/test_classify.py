"""Classification verdicts across the whole verdict taxonomy."""

import random

import pytest
from conftest import random_normalized_germ
from morinlab.classify import (DEGENERATE_RANK, FLAT_TO_ORDER, MORIN,
                               NOT_CORANK_ONE, REGULAR,
                               TRUNCATION_INSUFFICIENT, equivalence_fuzz,
                               is_normalized_form, morin_classify,
                               normalized_chain_rank)
from morinlab.forms import FormSpec, isotopy_form, normal_form
from morinlab.germ import adapt_target, singular_chain
from morinlab.jets import Jet
from morinlab.maps import MapJet
from morinlab.parser import parse_germ


def test_normal_forms_small():
    for spec in [FormSpec(1, 1), FormSpec(2, 1), FormSpec(3, 1),
                 FormSpec(1, 2), FormSpec(2, 2, extra=1)]:
        f = normal_form(spec)
        res = morin_classify(f, r_max=spec.r)
        assert res.is_morin(spec.r), (spec, res.label())
        assert res.label() == f"Morin({spec.r})"


def test_isotopy_forms_have_same_verdict():
    for e1 in (1, -1):
        for e2 in (1, -1):
            f = isotopy_form(FormSpec(2, 1, eps1=e1, eps2=e2))
            assert morin_classify(f, 2).is_morin(2)


def test_regular():
    f = MapJet(2, 3, (Jet.variable(2, 3, 1), Jet.variable(2, 3, 2),
                      Jet.monomial(2, 3, (1, 1))))
    assert morin_classify(f, 1).kind == REGULAR


def test_not_corank_one():
    comps = (Jet.variable(3, 3, 1),
             Jet.monomial(3, 3, (0, 2, 0)),
             Jet.monomial(3, 3, (0, 0, 2)),
             Jet.monomial(3, 3, (0, 1, 1)))
    res = morin_classify(MapJet(3, 4, comps), 1)
    assert res.kind == NOT_CORANK_ONE and res.corank == 2


def test_flat_to_order():
    # depth-3 germ probed only to depth 2: every tested value vanishes
    f = normal_form(FormSpec(3, 1), order=5)
    res = morin_classify(f, r_max=2)
    assert res.kind == FLAT_TO_ORDER and res.r_max == 2


def test_degenerate_rank():
    # an unfolding term is missing, so the first chain rank is deficient
    g = parse_germ(
        "map 4 -> 5 order 4 : [x1, x2, x3, x1*x4 + x2*x4^2, x4^3]")
    res = morin_classify(g.to_map(), 2)
    assert res.kind == DEGENERATE_RANK
    assert res.step == 0 and res.expected_rank == 2 and res.actual_rank == 1


def test_truncation_insufficient():
    f = normal_form(FormSpec(2, 1))  # order 4
    res = morin_classify(f, r_max=3)
    assert res.kind == TRUNCATION_INSUFFICIENT and res.required_order == 5


def test_normalized_rank_cross_check():
    rng = random.Random(20)
    checked = 0
    while checked < 20:
        m = rng.randint(2, 5)
        n = m + rng.randint(1, 2)
        f = random_normalized_germ(rng, m, n, 4)
        assert is_normalized_form(f)
        ld = adapt_target(f)
        chain = singular_chain(ld, 2)
        for r in (1, 2):
            assert chain.chain_ranks[r - 1] == normalized_chain_rank(f, r)
        checked += 1


def test_fuzz_is_deterministic():
    f = normal_form(FormSpec(1, 1))
    a = [v.label() for v in equivalence_fuzz(f, 4, 2, seed=9, r_max=1)]
    b = [v.label() for v in equivalence_fuzz(f, 4, 2, seed=9, r_max=1)]
    c = [v.label() for v in equivalence_fuzz(f, 4, 2, seed=10, r_max=1)]
    assert a == b
    assert all(lbl == "Morin(1)" for lbl in a)
    assert len(c) == 4


def test_rmax_validation():
    f = normal_form(FormSpec(1, 1))
    with pytest.raises(ValueError):
        morin_classify(f, 0)
