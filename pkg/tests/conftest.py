"""Shared strategies and helpers for the test suite."""

from __future__ import annotations

import random

from hypothesis import strategies as st

from morinlab.jets import Jet
from morinlab.maps import MapJet
from morinlab.rationals import QQ

rationals = st.fractions(
    min_value=-5, max_value=5, max_denominator=4).map(
        lambda f: QQ(f.numerator, f.denominator))


@st.composite
def jets(draw, num_vars=None, order=None, max_terms=8):
    nv = num_vars if num_vars is not None else draw(st.integers(1, 4))
    o = order if order is not None else draw(st.integers(0, 6))
    coeffs = {}
    for _ in range(draw(st.integers(0, max_terms))):
        expo = tuple(draw(st.integers(0, o)) for _ in range(nv))
        if sum(expo) <= o:
            coeffs[expo] = draw(rationals)
    return Jet(nv, o, coeffs)


def random_poly_jet(rng: random.Random, num_vars: int, order: int,
                    min_degree: int = 0, max_terms: int = 10) -> Jet:
    """Seeded random sparse jet with small rational coefficients."""
    coeffs = {}
    for _ in range(rng.randint(0, max_terms)):
        d = rng.randint(min_degree, order)
        expo = [0] * num_vars
        for _ in range(d):
            expo[rng.randrange(num_vars)] += 1
        c = rng.randint(-4, 4)
        if c:
            coeffs[tuple(expo)] = QQ(c, rng.choice((1, 2)))
    return Jet(num_vars, order, coeffs)


def random_adapted_germ(rng: random.Random, m: int, n: int, order: int) -> MapJet:
    """Corank-one germ already in adapted shape.

    The first m-1 components are coordinates plus higher-order noise; the
    last n-m+1 components have zero linear part.
    """
    comps = []
    for k in range(1, m):
        noise = random_poly_jet(rng, m, order, min_degree=2, max_terms=3)
        comps.append(Jet.variable(m, order, k) + noise)
    for _ in range(n - m + 1):
        comps.append(random_poly_jet(rng, m, order, min_degree=2, max_terms=6))
    return MapJet(m, n, tuple(comps))


def random_normalized_germ(rng: random.Random, m: int, n: int, order: int) -> MapJet:
    """Germ of the shape (x_1, ..., x_{m-1}, f_m, ..., f_n), corank one."""
    comps = [Jet.variable(m, order, k) for k in range(1, m)]
    for _ in range(n - m + 1):
        comps.append(random_poly_jet(rng, m, order, min_degree=2, max_terms=6))
    return MapJet(m, n, tuple(comps))
