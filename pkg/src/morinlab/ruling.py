"""Striction curves of one-parameter families of n-planes in R^{2n}.

A framed curve (gamma, delta) with an orthonormal director frame
delta_1, ..., delta_n in R^{2n} satisfying delta_i . delta_j' = 0 defines
the ruling map

    F(t, u_1, ..., u_n) = gamma(t) + sum_i u_i delta_i(t).

The striction curve sigma = gamma + sum_i u_i(t) delta_i(t), determined
by sigma' . delta_i' = 0, parametrizes the singular set of F, and F has
a 1-Morin singularity along it exactly where sigma is an immersion.
Writing sigma' = sum_i alpha_i delta_i, the two characterizations are
tied together by the determinant identity

    eta lambda_j (0) = (-1)^(n+j-1) alpha_j(0) Delta(0),

with eta = -dt + sum_i alpha_i du_i and Delta = det(delta, delta').
Everything here is exact: trigonometric frames enter as Taylor
truncations, and frame identities are enforced modulo the truncation
order with hard errors on violation.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .classify import MorinResult, morin_classify
from .errors import DimensionError, FrameError
from .jets import Jet, jet_det, jet_matrix_solve
from .linalg import rat_det, rat_rank
from .maps import MapJet
from .rationals import QQ, ZERO

Curve = tuple[Jet, ...]  # 2n one-variable jets in t


def cos_jet(order: int) -> Jet:
    coeffs = {(2 * k,): QQ((-1) ** k, math.factorial(2 * k))
              for k in range(order // 2 + 1) if 2 * k <= order}
    return Jet(1, order, coeffs)


def sin_jet(order: int) -> Jet:
    coeffs = {(2 * k + 1,): QQ((-1) ** k, math.factorial(2 * k + 1))
              for k in range(order // 2 + 1) if 2 * k + 1 <= order}
    return Jet(1, order, coeffs)


def _dot(a: Curve, b: Curve) -> Jet:
    acc = Jet.zero(1, min(x.order for x in list(a) + list(b)))
    for x, y in zip(a, b):
        acc = acc + x * y
    return acc


def _d(curve: Curve) -> Curve:
    return tuple(c.derive(1) for c in curve)


def _at_zero(curve: Curve) -> list:
    return [c.constant_term() for c in curve]


@dataclass(frozen=True)
class FramedCurve:
    """Base curve gamma and director frame delta in R^{2n}, as t-jets."""

    n: int
    gamma: Curve
    delta: tuple[Curve, ...]

    def __post_init__(self):
        dim = 2 * self.n
        object.__setattr__(self, "gamma", tuple(self.gamma))
        object.__setattr__(self, "delta", tuple(tuple(d) for d in self.delta))
        if len(self.gamma) != dim or len(self.delta) != self.n or any(
                len(d) != dim for d in self.delta):
            raise DimensionError(
                f"framed curve in R^{dim} needs {dim} gamma components and "
                f"{self.n} frame curves of {dim} components")
        jets = list(self.gamma) + [c for d in self.delta for c in d]
        orders = {j.order for j in jets}
        if len(orders) != 1 or any(j.num_vars != 1 for j in jets):
            raise DimensionError("all curve components must be one-variable "
                                 "jets of a shared order")

    @property
    def order(self) -> int:
        return self.gamma[0].order

    def validate(self) -> None:
        """Enforce the frame identities modulo the truncation order."""
        o = self.order
        for i in range(self.n):
            for j in range(i, self.n):
                dot = _dot(self.delta[i], self.delta[j])
                want = Jet.const(1, o, 1 if i == j else 0)
                if dot != want:
                    raise FrameError(
                        f"delta_{i + 1} . delta_{j + 1} != "
                        f"{'1' if i == j else '0'} modulo order {o}")
        for i in range(self.n):
            for j in range(self.n):
                if not _dot(self.delta[i], _d(self.delta[j])).is_zero():
                    raise FrameError(
                        f"delta_{i + 1} . delta_{j + 1}' != 0 modulo order {o - 1}")
        if rat_rank(self.frame_matrix_at_zero()) != 2 * self.n:
            raise FrameError("(delta(0), delta'(0)) is not invertible")

    def frame_matrix_at_zero(self) -> list[list]:
        """Columns delta_1(0), ..., delta_n(0), delta_1'(0), ..., delta_n'(0)."""
        cols = [_at_zero(d) for d in self.delta]
        cols += [_at_zero(_d(d)) for d in self.delta]
        return [[cols[j][i] for j in range(2 * self.n)] for i in range(2 * self.n)]


def _embed(c: Jet, num_vars: int, order: int) -> Jet:
    """View a t-jet as a jet in (t, u_1, ..., u_n) with t the first variable."""
    coeffs = {}
    for expo, coef in c.coeffs.items():
        if expo[0] <= order:
            coeffs[(expo[0],) + (0,) * (num_vars - 1)] = coef
    return Jet(num_vars, order, coeffs)


def ruling_map(fc: FramedCurve) -> MapJet:
    """The (n+1)-variable jet of F(t,u) = gamma(t) + sum u_i delta_i(t).

    Translated by -gamma(0) so the germ is based at the origin; the
    variables are ordered (t, u_1, ..., u_n).
    """
    fc.validate()
    n, o = fc.n, fc.order
    nv = n + 1
    comps = []
    for k in range(2 * n):
        coeffs = {}
        for expo, coef in fc.gamma[k].coeffs.items():
            if 0 < expo[0] <= o:
                coeffs[(expo[0],) + (0,) * n] = coef
        for i in range(n):
            for expo, coef in fc.delta[i][k].coeffs.items():
                if expo[0] + 1 > o:
                    continue
                key = (expo[0],) + tuple(1 if v == i else 0 for v in range(n))
                coeffs[key] = coeffs.get(key, ZERO) + coef
                if not coeffs[key]:
                    del coeffs[key]
        comps.append(Jet(nv, o, coeffs))
    return MapJet(nv, 2 * n, tuple(comps))


@dataclass(frozen=True)
class StrictionResult:
    u: Curve                  # striction coefficients u_i(t)
    sigma: Curve              # sigma = gamma + sum u_i delta_i
    alpha: Curve              # sigma' = sum alpha_i delta_i
    morin1_at_origin: bool    # alpha(0) != 0


def striction(fc: FramedCurve) -> StrictionResult:
    """Solve sigma' . delta_i' = 0 for the striction coefficients.

    u = -Gram^{-1} (gamma' . delta'), Gram_{ij} = delta_i' . delta_j',
    solved exactly over the jet ring.  alpha_i = sigma' . delta_i by
    orthonormality, since sigma' has no delta'-component.
    """
    fc.validate()
    n = fc.n
    dgamma = _d(fc.gamma)
    ddelta = [_d(d) for d in fc.delta]
    gram = [[_dot(ddelta[i], ddelta[j]) for j in range(n)] for i in range(n)]
    rhs = [-_dot(dgamma, ddelta[i]) for i in range(n)]
    try:
        u = tuple(jet_matrix_solve(gram, rhs))
    except Exception as exc:
        raise FrameError(f"Gram matrix (delta_i' . delta_j') is degenerate: {exc}")
    o = fc.order
    sigma = []
    for k in range(2 * n):
        acc = fc.gamma[k].truncate(u[0].order)
        for i in range(n):
            acc = acc + u[i] * fc.delta[i][k]
        sigma.append(acc)
    sigma = tuple(sigma)
    dsigma = _d(sigma)
    alpha = tuple(_dot(dsigma, fc.delta[i]) for i in range(n))
    morin1 = any(a.constant_term() for a in alpha)
    return StrictionResult(u=u, sigma=sigma, alpha=alpha, morin1_at_origin=morin1)


def rebase_to_striction(fc: FramedCurve) -> tuple[FramedCurve, StrictionResult]:
    """Replace the base curve by its striction curve (same frame)."""
    st = striction(fc)
    o = st.sigma[0].order
    rebased = FramedCurve(fc.n, st.sigma,
                          tuple(tuple(c.truncate(o) for c in d) for d in fc.delta))
    return rebased, st


@dataclass(frozen=True)
class RulingCheck:
    """Both 1-Morin characterizations plus the determinant identity."""

    classifier: MorinResult        # verdict on the re-based ruling map
    morin1_by_classifier: bool
    morin1_by_alpha: bool
    agree: bool
    alpha_at_zero: tuple
    eta_lambda_at_zero: tuple      # direct-determinant eta lambda_j (0)
    identity_rhs: tuple            # (-1)^(n+j-1) alpha_j(0) Delta(0)
    identity_holds: bool
    delta_det_at_zero: object      # Delta(0) = det(delta, delta')(0)


def ruling_morin1_check(fc: FramedCurve) -> RulingCheck:
    """Cross-check immersion, classifier, and the eta-lambda identity.

    The classifier path runs morin_classify on the ruling map of the
    re-based curve.  The identity path builds lambda_j directly as the
    2n x 2n determinant with columns (sigma' + sum u_i delta_i',
    delta_1..delta_n, delta_1'..^j..delta_n') and applies
    eta = -dt + sum alpha_i du_i, all over the (n+1)-variable jet ring.
    """
    rebased, st = rebase_to_striction(fc)
    n = fc.n
    o = rebased.order

    F = ruling_map(rebased)
    verdict = morin_classify(F, r_max=1)
    by_classifier = verdict.is_morin(1)
    alpha0 = tuple(a.constant_term() for a in st.alpha)
    by_alpha = any(alpha0)

    nv = n + 1
    L = o - 1
    dgamma = [_embed(c, nv, L) for c in _d(rebased.gamma)]
    delta_cols = [[_embed(c, nv, L) for c in d] for d in rebased.delta]
    ddelta_cols = [[_embed(c, nv, L) for c in _d(d)] for d in rebased.delta]
    u_vars = [Jet.variable(nv, L, i + 2) for i in range(n)]
    first_col = []
    for k in range(2 * n):
        acc = dgamma[k]
        for i in range(n):
            acc = acc + u_vars[i] * ddelta_cols[i][k]
        first_col.append(acc)

    alpha_emb = [_embed(a.truncate(L), nv, L) for a in st.alpha]
    eta_lambda0 = []
    for j in range(n):
        cols = [first_col] + delta_cols + [ddelta_cols[i] for i in range(n) if i != j]
        M = [[cols[c][row] for c in range(2 * n)] for row in range(2 * n)]
        lam = jet_det(M, L)
        el = -lam.derive(1)
        for i in range(n):
            el = el + alpha_emb[i] * lam.derive(i + 2)
        eta_lambda0.append(el.constant_term())

    Delta0 = rat_det(rebased.frame_matrix_at_zero())
    rhs = tuple((alpha0[j] if (n + j) % 2 == 0 else -alpha0[j]) * Delta0
                for j in range(n))
    return RulingCheck(
        classifier=verdict,
        morin1_by_classifier=by_classifier,
        morin1_by_alpha=by_alpha,
        agree=by_classifier == by_alpha,
        alpha_at_zero=alpha0,
        eta_lambda_at_zero=tuple(eta_lambda0),
        identity_rhs=rhs,
        identity_holds=tuple(eta_lambda0) == rhs,
        delta_det_at_zero=Delta0,
    )


# -- frame constructors -----------------------------------------------


def rotation_frame(order: int) -> tuple[Curve, Curve]:
    """delta_1 = (cos t, sin t, 0, 0), delta_2 = (0, 0, cos t, sin t)."""
    c, s, z = cos_jet(order), sin_jet(order), Jet.zero(1, order)
    return ((c, s, z, z), (z, z, c, s))


def _mat_exp_jet(A: list[list], order: int) -> list[list[Jet]]:
    """exp(tA) as a matrix of t-jets, truncated at the given order."""
    dim = len(A)
    term = [[QQ(1) if i == j else ZERO for j in range(dim)] for i in range(dim)]
    coeffs = [[{(0,): term[i][j]} if term[i][j] else {}
               for j in range(dim)] for i in range(dim)]
    for k in range(1, order + 1):
        nxt = [[sum((term[i][l] * A[l][j] for l in range(dim)), ZERO) / k
                for j in range(dim)] for i in range(dim)]
        term = nxt
        for i in range(dim):
            for j in range(dim):
                if term[i][j]:
                    coeffs[i][j][(k,)] = term[i][j]
    return [[Jet(1, order, coeffs[i][j]) for j in range(dim)] for i in range(dim)]


def exp_frame(B: list[list], order: int) -> tuple[Curve, ...]:
    """Orthonormal frame delta_i(t) = exp(tA) e_i for A = [[0, -B^T], [B, 0]].

    A is antisymmetric, so exp(tA) is orthogonal modulo truncation; the
    zero top-left block gives delta_i . delta_j' = 0, and (delta, delta')
    at 0 is invertible exactly when B is.
    """
    n = len(B)
    if not rat_det([[QQ(x) for x in row] for row in B]):
        raise FrameError("frame generator B must be invertible")
    A = [[ZERO] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        for j in range(n):
            A[i][n + j] = -QQ(B[j][i])
            A[n + i][j] = QQ(B[i][j])
    Q = _mat_exp_jet(A, order)
    return tuple(tuple(Q[row][i] for row in range(2 * n)) for i in range(n))


def random_framed_curve(n: int, order: int, seed) -> FramedCurve:
    """Seed-deterministic framed curve with a random exp-frame and base curve."""
    rng = random.Random(repr(seed))
    while True:
        B = [[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)]
        if rat_det([[QQ(x) for x in row] for row in B]):
            break
    delta = exp_frame(B, order)
    gamma = []
    for _ in range(2 * n):
        coeffs = {}
        for d in range(order + 1):
            c = rng.randint(-2, 2)
            if c:
                coeffs[(d,)] = QQ(c, rng.choice((1, 2)))
        gamma.append(Jet(1, order, coeffs))
    return FramedCurve(n, tuple(gamma), delta)
