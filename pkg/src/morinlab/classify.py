"""The Morin classification criterion.

A corank-one germ is an r-Morin singularity exactly when the first
nonvanishing iterated derivative eta^j Lambda(0) occurs at j = r and

    rank d(Lambda, eta Lambda, ..., eta^{r-1} Lambda)_0 = r(n-m+1).

Both conditions are exact vanishing/rank tests, so the verdict carries
no tolerance.  Degenerate inputs are diagnosed rather than forced into a
class: corank >= 2 is refused, a failing rank yields the first failing
chain step, and jets that vanish to the full tested depth report their
flatness honestly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotCorankOneError, TruncationError
from .germ import (LambdaData, SingularChainReport, adapt_target,
                   corank_at_origin, singular_chain)
from .linalg import rat_rank
from .maps import MapJet

REGULAR = "regular"
MORIN = "morin"
NOT_CORANK_ONE = "not_corank_one"
DEGENERATE_RANK = "degenerate_rank"
FLAT_TO_ORDER = "flat_to_order"
TRUNCATION_INSUFFICIENT = "truncation_insufficient"


@dataclass(frozen=True)
class MorinResult:
    kind: str
    r: int | None = None
    corank: int | None = None
    step: int | None = None
    expected_rank: int | None = None
    actual_rank: int | None = None
    r_max: int | None = None
    required_order: int | None = None
    evidence: SingularChainReport | None = None

    def is_morin(self, r: int | None = None) -> bool:
        return self.kind == MORIN and (r is None or self.r == r)

    def label(self) -> str:
        if self.kind == MORIN:
            return f"Morin({self.r})"
        if self.kind == REGULAR:
            return "Regular"
        if self.kind == NOT_CORANK_ONE:
            return f"NotCorankOne({self.corank})"
        if self.kind == DEGENERATE_RANK:
            return (f"DegenerateRank(step={self.step}, "
                    f"expected={self.expected_rank}, actual={self.actual_rank})")
        if self.kind == FLAT_TO_ORDER:
            return f"FlatToOrder({self.r_max})"
        return f"TruncationInsufficient(required_order={self.required_order})"


def morin_classify(f: MapJet, r_max: int) -> MorinResult:
    """Classify f as Regular / Morin(r) / a named degeneracy, for r <= r_max."""
    if r_max < 1:
        raise ValueError("r_max must be >= 1")
    if f.order < r_max + 2:
        return MorinResult(kind=TRUNCATION_INSUFFICIENT, required_order=r_max + 2)
    corank = corank_at_origin(f)
    if corank == 0:
        return MorinResult(kind=REGULAR)
    if corank != 1:
        return MorinResult(kind=NOT_CORANK_ONE, corank=corank)
    ld = adapt_target(f)
    chain = singular_chain(ld, r_max)
    a1 = f.target_dim - f.source_dim + 1
    # chain.eta_lambda_values[0] is Lambda(0) = 0; the candidate r is the
    # least j >= 1 with eta^j Lambda(0) != 0.
    r = next((j for j in range(1, r_max + 1)
              if any(chain.eta_lambda_values[j])), None)
    if r is None:
        return MorinResult(kind=FLAT_TO_ORDER, r_max=r_max, evidence=chain)
    for j in range(r):
        expected = (j + 1) * a1
        if chain.chain_ranks[j] != expected:
            return MorinResult(kind=DEGENERATE_RANK, step=j,
                               expected_rank=expected,
                               actual_rank=chain.chain_ranks[j],
                               evidence=chain)
    return MorinResult(kind=MORIN, r=r, evidence=chain)


def is_normalized_form(f: MapJet) -> bool:
    """True iff f is syntactically (x_1, ..., x_{m-1}, f_m, ..., f_n)."""
    m = f.source_dim
    from .jets import Jet
    for k in range(m - 1):
        if f.components[k] != Jet.variable(m, f.order, k + 1):
            return False
    return True


def normalized_chain_rank(f: MapJet, r: int) -> int:
    """Morin's normalized rank test: rank d(F, F', ..., F^(r-1))_0.

    Only valid for germs already in the normalized shape accepted by
    is_normalized_form, with F = (f_m', ..., f_n') and ' = d/dx_m.  This
    is an independent cross-check path for the coordinate-free rank.
    """
    if not is_normalized_form(f):
        raise ValueError("normalized_chain_rank needs (x_1,...,x_{m-1},f_m,...,f_n) shape")
    m = f.source_dim
    rows = []
    F = [c.derive(m) for c in f.components[m - 1:]]
    for _ in range(r):
        rows.extend(g.linear_coeffs() for g in F)
        F = [g.derive(m) for g in F]
    return rat_rank(rows)


def equivalence_fuzz(f: MapJet, trials: int, degree: int, seed: int,
                     r_max: int) -> list[MorinResult]:
    """Classify random conjugates Phi o f o phi of f.

    Each trial draws an independent orientation-preserving source/target
    diffeomorphism jet pair; the verdict list is ordered by trial index
    and fully determined by the seed.
    """
    from .forms import conjugate, random_diffeo

    results = []
    for t in range(trials):
        phi = random_diffeo(f.source_dim, degree, seed=(seed, t, "source"),
                            order=f.order, orientation_preserving=True)
        Phi = random_diffeo(f.target_dim, degree, seed=(seed, t, "target"),
                            order=f.order, orientation_preserving=True)
        results.append(morin_classify(conjugate(f, phi, Phi), r_max))
    return results
