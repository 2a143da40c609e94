"""A-isotopy invariants of Morin germs and explicit rotation witnesses.

In the square case m = r(n-m+1) the sign

    D = sign det d(lambda_1, eta lambda_1, ..., eta^{r-1} lambda_1,
                   lambda_2, ..., eta^{r-1} lambda_{n-m+1})_0

is well defined once a gauge is fixed, and distinguishes the A-isotopy
classes inside an A-class.  The gauge used here: source coordinates as
given, target coordinates from adapt_target's orientation-normalized
change, and the cofactor null field with its sign normalized so that the
first nonzero coordinate of eta(0) is positive.  On the two-sign
representatives h_{r,(eps1,eps2)} this yields

    D = eps1^((a+1)r+1) * eps2^r.

Flipping eta's sign multiplies D by (-1)^((r-1)r(a+1)/2); composing an
orientation-preserving target change whose leading (m-1)-block reverses
orientation multiplies D by (-1)^(ar).  An A-class splits into two
isotopy classes exactly when both factors are +1 and the germ is not a
suspension.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionError, WitnessError
from .forms import FormSpec, conjugate, pi_rotation
from .germ import adapt_target, eta_derive, lambda_vector, null_field
from .linalg import rat_det
from .maps import MapJet
from .rationals import sign


def eta_flip_sign(eta_at_zero) -> int:
    """Sign of the first nonzero entry of eta(0); +1 means already normalized."""
    for v in eta_at_zero:
        if v:
            return sign(v)
    raise DimensionError("eta(0) = 0; germ is not corank one at the origin")


def d_invariant(f: MapJet, r: int) -> int:
    """The sign D for a non-suspension r-Morin germ, in the fixed gauge."""
    m, n = f.source_dim, f.target_dim
    a1 = n - m + 1
    if m != r * a1:
        raise WitnessError(
            f"D is only defined in the square case m = r(n-m+1); got m={m}, r(n-m+1)={r * a1}")
    ld = adapt_target(f)
    lam = lambda_vector(ld)
    eta = null_field(ld)
    flip = eta_flip_sign([e.constant_term() for e in eta])
    if flip < 0:
        eta = [-e for e in eta]
    blocks = [lam]
    for _ in range(r - 1):
        blocks.append(eta_derive(eta, blocks[-1]))
    rows = []
    for i in range(a1):
        for j in range(r):
            rows.append(blocks[j][i].linear_coeffs())
    det = rat_det(rows)
    if not det:
        raise WitnessError(
            "det d(Lambda,...,eta^{r-1}Lambda)_0 = 0; germ is not r-Morin")
    return sign(det)


GAUGE_NOTE = ("source coordinates as given; target change from adapt_target "
              "(det > 0, identity on the pivot block); cofactor null field "
              "with eta(0) sign-normalized; rows grouped per lambda component")


@dataclass(frozen=True)
class IsotopyReport:
    r: int
    a: int
    case_id: int            # r mod 4
    suspension: bool
    class_count: int        # 1 or 2
    invariant_label: str    # "eps1", "eps2", or "none"
    d_sign: int | None      # D of h_{0,r}; undefined for suspensions
    gauge_note: str = GAUGE_NOTE


def isotopy_classify(r: int, a: int, suspension: bool = False) -> IsotopyReport:
    """Number of A-isotopy classes in the A-class of an r-Morin germ.

    Derived from the two sign-transformation factors alone: the
    eta-flip factor (-1)^((r-1)r(a+1)/2) and the target-flip factor
    (-1)^(ar).  D separates two classes iff neither flip can reach it.
    """
    if r < 1 or a < 1:
        raise DimensionError("need r >= 1 and a >= 1")
    frame_flip = -1 if ((r - 1) * r * (a + 1) // 2) % 2 else 1
    target_flip = -1 if (a * r) % 2 else 1
    two = frame_flip == 1 and target_flip == 1 and not suspension
    if two:
        e1_exponent = (a + 1) * r + 1
        label = "eps1" if e1_exponent % 2 else "eps2"
    else:
        label = "none"
    return IsotopyReport(r=r, a=a, case_id=r % 4, suspension=suspension,
                         class_count=2 if two else 1, invariant_label=label,
                         d_sign=None if suspension else 1)


# -- rotation witnesses ----------------------------------------------


@dataclass(frozen=True)
class RotationWitness:
    """Rotation sequences with conjugate(f, sources, targets) = representative."""

    spec: FormSpec
    representative: FormSpec
    source_sets: tuple[tuple[int, ...], ...]
    target_sets: tuple[tuple[int, ...], ...]


def _blocks_odd(r: int, a: int) -> set[int]:
    """{kr + j : k = 0..a-1, j odd <= r} plus {ar + j : j odd <= r-2}."""
    out: set[int] = set()
    for k in range(a):
        out.update(k * r + j for j in range(1, r + 1, 2))
    out.update(a * r + j for j in range(1, r - 1, 2))
    return out


def isotopy_witness(spec: FormSpec) -> RotationWitness:
    """Explicit even-cardinality rotation sequences realizing the reduction.

    Reduces h_{r,(eps1,eps2)} as far as the theory allows: one sign is
    always removable (eps2 for even r, eps1 for odd r), the other falls
    in the suspension case and in the merging residues of r mod 4.  The
    reached representative is returned with the witness.
    """
    r, a, m, n = spec.r, spec.a, spec.m, spec.n
    e1, e2 = spec.eps1, spec.eps2
    src: list[tuple[int, ...]] = []
    tgt: list[tuple[int, ...]] = []

    def add(side: list, indices) -> None:
        idx = tuple(sorted(set(indices)))
        if idx:
            if len(idx) % 2:
                raise WitnessError(f"internal: odd rotation set {idx}")
            side.append(idx)

    if r % 2 == 0:
        if e2 == -1:
            add(tgt, {m, n})
            add(src, range(1, r + 1))
            add(tgt, range(1, r + 1))
            e2 = 1
        if e1 == -1:
            if spec.suspension:
                add(src, set(range(2, r + 1)) | {m - 1})
                add(tgt, set(range(1, r + 1)) | {m - 1, m})
                e1 = 1
            elif r % 4 == 2 and a % 2 == 0:
                body = {1} | set(range(2, r + 1, 2)) | {m}
                for k in range(1, a):
                    body.update(k * r + j for j in range(1, r, 2))
                body.update(a * r + j for j in range(2, r - 1, 2))
                add(src, body)
                add(tgt, (body - {1, m}) | {m, n})
                e1 = 1
    else:
        if e1 == -1:
            add(src, range(2, r + 1))
            add(tgt, set(range(1, r + 1)) | {m})
            e1 = 1
        if e2 == -1:
            if spec.suspension:
                add(tgt, {m, n})
                add(src, set(range(1, r + 1)) | {m - 1})
                add(tgt, set(range(1, r + 1)) | {m - 1})
                e2 = 1
            elif r % 4 == 3 or a % 2 == 1:
                body = _blocks_odd(r, a) | {m}
                add(src, body)
                add(tgt, (body - {m}) | {n})
                e2 = 1

    rep = FormSpec(r=r, a=a, extra=spec.extra, eps1=e1, eps2=e2)
    return RotationWitness(spec=spec, representative=rep,
                           source_sets=tuple(src), target_sets=tuple(tgt))


def apply_witness(f: MapJet, witness: RotationWitness) -> MapJet:
    """Conjugate f by the witness rotations (targets outside, sources inside)."""
    out = f
    for idx in witness.source_sets:
        phi = pi_rotation(out.source_dim, idx, order=out.order)
        out = conjugate(out, phi, pi_rotation(out.target_dim, (), order=out.order))
    for idx in witness.target_sets:
        Phi = pi_rotation(out.target_dim, idx, order=out.order)
        out = conjugate(out, pi_rotation(out.source_dim, (), order=out.order), Phi)
    return out
