"""Normal forms, isotopy forms, rotations, and random diffeomorphism jets.

The r-Morin normal form in source dimension m = r(a+1) + extra and
target dimension n = m + a is

    h_{0,r} = (x_1, ..., x_{m-1}, h_1, ..., h_{a+1}),
    h_i     = sum_{j=1}^r x_{(i-1)r+j} x_m^j            (i = 1..a),
    h_{a+1} = sum_{j=1}^{r-1} x_{ar+j} x_m^j + x_m^{r+1}.

The two-sign isotopy representative scales the first component and the
first summand of h_1 by eps1 and the last component by eps2.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .errors import DimensionError, ParityError
from .jets import Jet
from .linalg import rat_det
from .maps import MapJet, jet_compose
from .rationals import QQ


@dataclass(frozen=True)
class FormSpec:
    r: int
    a: int
    extra: int = 0
    eps1: int = 1
    eps2: int = 1

    def __post_init__(self):
        if self.r < 1 or self.a < 1 or self.extra < 0:
            raise DimensionError(f"invalid form spec {self}")
        if self.eps1 not in (1, -1) or self.eps2 not in (1, -1):
            raise DimensionError("eps signs must be +1 or -1")

    @property
    def m(self) -> int:
        return self.r * (self.a + 1) + self.extra

    @property
    def n(self) -> int:
        return self.m + self.a

    @property
    def suspension(self) -> bool:
        return self.extra > 0

    def min_order(self) -> int:
        return self.r + 2


def _tail_components(spec: FormSpec, order: int) -> list[Jet]:
    """h_2, ..., h_{a+1} (shared between the plain and isotopy forms)."""
    r, a, m = spec.r, spec.a, spec.m
    comps = []
    for i in range(2, a + 1):
        coeffs = {}
        for j in range(1, r + 1):
            expo = [0] * m
            expo[(i - 1) * r + j - 1] = 1
            expo[m - 1] = j
            coeffs[tuple(expo)] = 1
        comps.append(Jet(m, order, coeffs))
    coeffs = {}
    for j in range(1, r):
        expo = [0] * m
        expo[a * r + j - 1] = 1
        expo[m - 1] = j
        coeffs[tuple(expo)] = 1
    expo = [0] * m
    expo[m - 1] = r + 1
    coeffs[tuple(expo)] = 1
    comps.append(Jet(m, order, coeffs))
    return comps


def normal_form(spec: FormSpec, order: int | None = None) -> MapJet:
    """The normal form h_{0,r} as an exact jet."""
    r, m = spec.r, spec.m
    if order is None:
        order = spec.min_order()
    if order < spec.min_order():
        raise DimensionError(f"order {order} < r + 2 = {spec.min_order()}")
    comps = [Jet.variable(m, order, k) for k in range(1, m)]
    coeffs = {}
    for j in range(1, r + 1):
        expo = [0] * m
        expo[j - 1] = 1
        expo[m - 1] = j
        coeffs[tuple(expo)] = 1
    comps.append(Jet(m, order, coeffs))
    comps.extend(_tail_components(spec, order))
    return MapJet(m, spec.n, tuple(comps))


def isotopy_form(spec: FormSpec, order: int | None = None) -> MapJet:
    """The representative h_{r,(eps1,eps2)} of an A-isotopy class."""
    r, m = spec.r, spec.m
    if order is None:
        order = spec.min_order()
    if order < spec.min_order():
        raise DimensionError(f"order {order} < r + 2 = {spec.min_order()}")
    comps = [Jet.variable(m, order, 1).scale(spec.eps1)]
    comps.extend(Jet.variable(m, order, k) for k in range(2, m))
    coeffs = {}
    for j in range(1, r + 1):
        expo = [0] * m
        expo[j - 1] = 1
        expo[m - 1] = j
        coeffs[tuple(expo)] = spec.eps1 if j == 1 else 1
    comps.append(Jet(m, order, coeffs))
    tail = _tail_components(spec, order)
    tail[-1] = tail[-1].scale(spec.eps2)
    comps.extend(tail)
    return MapJet(m, spec.n, tuple(comps))


def pi_rotation(dim: int, indices, order: int = 1) -> MapJet:
    """Diagonal linear jet with -1 on an even-cardinality index set.

    Even cardinality keeps the determinant at +1, so the rotation lies in
    the orientation-preserving (isotopy-trivial) class.
    """
    idx = set(indices)
    if len(idx) % 2:
        raise ParityError(f"rotation index set {sorted(idx)} has odd cardinality")
    if idx and (min(idx) < 1 or max(idx) > dim):
        raise DimensionError(f"rotation indices {sorted(idx)} out of range 1..{dim}")
    comps = []
    for k in range(1, dim + 1):
        v = Jet.variable(dim, order, k)
        comps.append(-v if k in idx else v)
    return MapJet(dim, dim, tuple(comps))


def random_diffeo(dim: int, degree: int, seed, order: int | None = None,
                  orientation_preserving: bool = True,
                  density: float = 0.3) -> MapJet:
    """Seed-deterministic random polynomial diffeomorphism jet.

    Invertible integer linear part (det > 0 when orientation_preserving),
    plus sparse higher-order terms with small rational coefficients.
    """
    if degree < 1:
        raise DimensionError("diffeo degree must be >= 1")
    if order is None:
        order = degree
    rng = random.Random(repr(seed))
    while True:
        L = [[QQ(rng.randint(-2, 2)) for _ in range(dim)] for _ in range(dim)]
        det = rat_det(L)
        if det:
            break
    if orientation_preserving and det < 0:
        L[0] = [-x for x in L[0]]
    comps = []
    for i in range(dim):
        coeffs = {}
        for j in range(dim):
            if L[i][j]:
                expo = tuple(1 if k == j else 0 for k in range(dim))
                coeffs[expo] = L[i][j]
        for d in range(2, degree + 1):
            for combo in itertools.combinations_with_replacement(range(dim), d):
                if rng.random() >= density:
                    continue
                num = rng.randint(-3, 3)
                if not num:
                    continue
                den = rng.choice((1, 2))
                expo = [0] * dim
                for v in combo:
                    expo[v] += 1
                coeffs[tuple(expo)] = QQ(num, den)
        comps.append(Jet(dim, order, coeffs))
    return MapJet(dim, dim, tuple(comps))


def conjugate(f: MapJet, phi: MapJet, Phi: MapJet) -> MapJet:
    """Phi o f o phi."""
    return jet_compose(Phi, jet_compose(f, phi))


def identity_map(dim: int, order: int) -> MapJet:
    return MapJet(dim, dim,
                  tuple(Jet.variable(dim, order, k) for k in range(1, dim + 1)))


def invert_diffeo(phi: MapJet) -> MapJet:
    """Truncated compositional inverse of a diffeomorphism jet."""
    from .linalg import mat_inv

    if phi.source_dim != phi.target_dim:
        raise DimensionError("only equidimensional jets can be inverted")
    dim, order = phi.source_dim, phi.order
    L = phi.jacobian_at_origin()
    Linv = mat_inv(L)
    ident = identity_map(dim, order)
    lin = ident.apply_linear_target(L)
    higher = MapJet(dim, dim, tuple(
        phi.components[i] - lin.components[i] for i in range(dim)))
    psi = ident.apply_linear_target(Linv)
    # each pass extends the matched order by one
    for _ in range(order - 1):
        correction = jet_compose(higher, psi)
        psi = MapJet(dim, dim, tuple(
            (ident.components[i] - correction.components[i])
            for i in range(dim))).apply_linear_target(Linv)
    return psi
