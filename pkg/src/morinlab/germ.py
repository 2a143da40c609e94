"""Adapted coordinates, the lambda vector, and the null vector field.

For a corank-one germ f: (R^m,0) -> (R^n,0) with rank df_0 = m-1 one can
choose target coordinates so that the first m-1 components have linearly
independent differentials at 0 and the remaining n-m+1 components have
vanishing differential.  In such coordinates

    lambda_i = det(df_1, ..., df_{m-1}, df_{m-1+i}),   i = 1..n-m+1,

and the common zero set of the lambda_i is the singular set S(f).  A null
vector field eta spans ker df_p along S(f); here it is gauge-fixed by the
cofactor construction on the (m-1) x m Jacobian of (f_1,...,f_{m-1}),
which annihilates d(f_1,...,f_{m-1}) identically as a jet identity.
Iterated directional derivatives eta^j(lambda) evaluated at 0, together
with the ranks of d(Lambda, eta Lambda, ..., eta^j Lambda)_0, are the raw
material of the classification criterion.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DimensionError, NotCorankOneError, TruncationError
from .jets import Jet, jet_det, jet_inv, jet_matrix_solve
from .linalg import Matrix, identity, rat_det, rat_rank
from .maps import MapJet
from .rationals import ZERO


def corank_at_origin(f: MapJet) -> int:
    return f.source_dim - rat_rank(f.jacobian_at_origin())


@dataclass
class LambdaData:
    """Adapted germ plus the derived Lambda and eta data (filled lazily)."""

    adapted: MapJet
    target_change: Matrix
    lam: list[Jet] | None = None
    eta: list[Jet] | None = None

    @property
    def source_dim(self) -> int:
        return self.adapted.source_dim

    @property
    def target_dim(self) -> int:
        return self.adapted.target_dim


@dataclass(frozen=True)
class SingularChainReport:
    """eta^j Lambda(0) for j = 0..r_max and the chain ranks.

    chain_ranks[j] = rank d(Lambda, eta Lambda, ..., eta^j Lambda)_0, an
    exact m x (j+1)(n-m+1) rank.
    """

    eta_lambda_values: tuple[tuple, ...]
    chain_ranks: tuple[int, ...]


def adapt_target(f: MapJet) -> LambdaData:
    """Find a rational linear target change T putting f into adapted form.

    Pivot rows of df_0 are selected greedily in target order; the
    remaining components get their (dependent) linear parts eliminated.
    The result is normalized so det T > 0 while T acts as the identity on
    the span of the pivot components, which keeps the sign invariant of
    the isotopy module well defined.
    """
    m, n = f.source_dim, f.target_dim
    if m >= n:
        raise DimensionError(f"need m < n, got m={m}, n={n}")
    if f.order < 1:
        raise DimensionError("order >= 1 required to read df_0")
    df0 = f.jacobian_at_origin()

    corank = m - rat_rank(df0)
    if corank != 1:
        raise NotCorankOneError(corank)

    # Greedy pivot selection: row i joins the basis iff it is independent
    # of the rows already chosen.  Exact arithmetic makes this unambiguous.
    pivots: list[int] = []
    basis: list[list] = []
    for i in range(n):
        if len(pivots) == m - 1:
            break
        if rat_rank(basis + [df0[i]]) > len(basis):
            pivots.append(i)
            basis.append(df0[i])
    rest = [i for i in range(n) if i not in pivots]

    # Row permutation: pivots first, then the rest in original order.
    perm = pivots + rest
    T = [[ZERO] * n for _ in range(n)]
    for new, old in enumerate(perm):
        T[new][old] = ZERO + 1
    # Eliminate the linear parts of the dependent components: each row of
    # df0 indexed by `rest` is a unique combination of the pivot rows.
    coeffs_matrix = [[basis[k][j] for k in range(m - 1)] for j in range(m)]  # m x (m-1)
    for new, old in enumerate(rest):
        target_row = df0[old]
        combo = _solve_overdetermined(coeffs_matrix, target_row)
        for k, c in enumerate(combo):
            if c:
                T[m - 1 + new][pivots[k]] -= c
    if rat_det(T) < 0:
        T[n - 1] = [-x for x in T[n - 1]]
    return LambdaData(adapted=f.apply_linear_target(T), target_change=T)


def _solve_overdetermined(A: Matrix, b: list) -> list:
    """Solve A c = b where A is m x (m-1) of full column rank and b in col(A)."""
    ncols = len(A[0]) if A else 0
    rows = [list(A[i]) + [b[i]] for i in range(len(A))]
    pivot_cols = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pivot = rows[r][col]
        rows[r] = [x / pivot for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                factor = rows[i][col]
                rows[i] = [rows[i][j] - factor * rows[r][j] for j in range(ncols + 1)]
        pivot_cols.append(col)
        r += 1
    sol = [ZERO] * ncols
    for r, col in enumerate(pivot_cols):
        sol[col] = rows[r][ncols]
    return sol


def lambda_vector(ld: LambdaData, order: int | None = None) -> list[Jet]:
    """Compute Lambda = (lambda_1, ..., lambda_{n-m+1}) for an adapted germ.

    The m x m jet determinants share their first m-1 columns, so one
    elimination pass (unit pivots exist because d(f_1,...,f_{m-1})_0 has
    full rank) is recorded once and replayed on each final column.
    """
    f = ld.adapted
    m, n = f.source_dim, f.target_dim
    if f.order < 1:
        raise TruncationError(1, "order >= 1 required for lambda_vector")
    L = f.order - 1 if order is None else min(order, f.order - 1)

    # columns[k][j] = d f_{k+1} / d x_{j+1}, truncated
    def column(comp_index: int) -> list[Jet]:
        c = f.components[comp_index]
        return [c.derive(j + 1).truncate(L) for j in range(m)]

    cols = [column(k) for k in range(m - 1)]
    work = [[cols[k][j] for k in range(m - 1)] for j in range(m)]  # m rows, m-1 cols
    remaining = list(range(m))
    ops: list[tuple[int, int, Jet]] = []
    pivot_rows: list[int] = []
    pivot_jets: list[Jet] = []
    for k in range(m - 1):
        piv = next((j for j in remaining if work[j][k].constant_term()), None)
        if piv is None:
            # Shared elimination needs a unit pivot; fall back to plain
            # Laplace determinants (cannot happen for adapted germs).
            return _lambda_vector_laplace(ld, L)
        pivot_rows.append(piv)
        pivot_jets.append(work[piv][k])
        remaining.remove(piv)
        inv = jet_inv(work[piv][k])
        for j in remaining:
            if work[j][k].is_zero():
                continue
            factor = work[j][k] * inv
            ops.append((j, piv, factor))
            for kk in range(k + 1, m - 1):
                work[j][kk] = work[j][kk] - factor * work[piv][kk]
            work[j][k] = Jet.zero(m, L)
    free_row = remaining[0]

    # Sign of the row permutation (pivot_rows..., free_row) -> (0..m-1).
    perm = pivot_rows + [free_row]
    sgn = _perm_sign(perm)

    prod = Jet.const(m, L, 1)
    for p in pivot_jets:
        prod = prod * p

    lams = []
    for i in range(n - m + 1):
        col = column(m - 1 + i)
        col = list(col)
        for (j, piv, factor) in ops:
            col[j] = col[j] - factor * col[piv]
        lam = prod * col[free_row]
        if sgn < 0:
            lam = -lam
        lams.append(lam)
    ld.lam = lams
    return lams


def _lambda_vector_laplace(ld: LambdaData, L: int) -> list[Jet]:
    f = ld.adapted
    m, n = f.source_dim, f.target_dim
    lams = []
    for i in range(n - m + 1):
        comps = list(range(m - 1)) + [m - 1 + i]
        M = [[f.components[k].derive(j + 1).truncate(L) for k in comps]
             for j in range(m)]
        lams.append(jet_det(M, L))
    ld.lam = lams
    return lams


def _perm_sign(perm: list[int]) -> int:
    sgn = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sgn = -sgn
    return sgn


def null_field(ld: LambdaData, order: int | None = None) -> list[Jet]:
    """Cofactor null vector field: eta_k = (-1)^(m+k) * minor_k.

    minor_k deletes column k from the (m-1) x m Jacobian of
    (f_1,...,f_{m-1}).  By the cofactor identity this annihilates
    d(f_1,...,f_{m-1}) as a jet, and eta(0) != 0 because that Jacobian
    has full rank at the origin.
    """
    f = ld.adapted
    m = f.source_dim
    if f.order < 1:
        raise TruncationError(1, "order >= 1 required for null_field")
    L = f.order - 1 if order is None else min(order, f.order - 1)
    if m == 1:
        eta = [Jet.const(1, L, 1)]
        ld.eta = eta
        return eta
    jac = [[f.components[i].derive(j + 1).truncate(L) for j in range(m)]
           for i in range(m - 1)]
    # One minor has invertible constant term because the Jacobian has full
    # rank at 0; the rest of the cofactor vector comes from solving the
    # (m-1)-square kernel system instead of m separate determinants.
    jac0 = [[jac[i][j].constant_term() for j in range(m)] for i in range(m - 1)]
    k0 = next(k for k in range(m)
              if rat_rank([row[:k] + row[k + 1:] for row in jac0]) == m - 1)
    cols = [j for j in range(m) if j != k0]
    minor0 = jet_det([[jac[i][j] for j in cols] for i in range(m - 1)], L)
    rhs = [-jac[i][k0] for i in range(m - 1)]
    y = jet_matrix_solve([[jac[i][j] for j in cols] for i in range(m - 1)], rhs)
    scale = minor0 if (m + k0 + 1) % 2 == 0 else -minor0
    eta = []
    yi = iter(y)
    for k in range(m):
        eta.append(scale if k == k0 else scale * next(yi))
    ld.eta = eta
    return eta


def null_field_cofactor(ld: LambdaData, order: int | None = None) -> list[Jet]:
    """Reference implementation of null_field: all m minors by Laplace.

    Slower than null_field but free of linear solves; used to cross-check.
    """
    f = ld.adapted
    m = f.source_dim
    L = f.order - 1 if order is None else min(order, f.order - 1)
    jac = [[f.components[i].derive(j + 1).truncate(L) for j in range(m)]
           for i in range(m - 1)]
    eta = []
    for k in range(1, m + 1):
        if m == 1:
            minor = Jet.const(1, L, 1)
        else:
            cols = [j for j in range(m) if j != k - 1]
            minor = jet_det([[jac[i][j] for j in cols] for i in range(m - 1)], L)
        eta.append(minor if (m + k) % 2 == 0 else -minor)
    return eta


def eta_derive(eta: list[Jet], g: list[Jet]) -> list[Jet]:
    """Directional derivative (eta g)_i = sum_k eta_k * dg_i/dx_k."""
    out = []
    for gi in g:
        acc = Jet.zero(gi.num_vars, max(gi.order - 1, 0))
        for k, ek in enumerate(eta, start=1):
            if not ek.is_zero():
                acc = acc + ek * gi.derive(k)
        out.append(acc)
    return out


def singular_chain(ld: LambdaData, r_max: int) -> SingularChainReport:
    """Record eta^j Lambda(0) and the chain ranks for j = 0..r_max.

    Requires f.order >= r_max + 2 so every recorded entry survives the
    derivative-order loss; a violation is a hard error, never a silently
    wrong answer.
    """
    f = ld.adapted
    m, n = f.source_dim, f.target_dim
    if r_max < 1:
        raise ValueError("r_max must be >= 1")
    if f.order < r_max + 2:
        raise TruncationError(r_max + 2)
    # Depth bookkeeping: step j consumes one order, and the deepest reads
    # are eta^{r_max} Lambda(0) (value) and d(eta^{r_max} Lambda)_0
    # (gradient), so Lambda at order r_max + 1 and eta at order r_max
    # retain everything the report needs.
    lam = ld.lam if ld.lam is not None else lambda_vector(ld, order=r_max + 1)
    lam = [g.truncate(min(r_max + 1, g.order)) for g in lam]
    eta = ld.eta if ld.eta is not None else null_field(ld, order=r_max)
    eta = [e.truncate(min(r_max, e.order)) for e in eta]
    values = []
    rank_rows: list[list] = []
    ranks = []
    g = lam
    for j in range(r_max + 1):
        values.append(tuple(gi.constant_term() for gi in g))
        for gi in g:
            rank_rows.append(gi.linear_coeffs())
        # rows are gradients; rank of the transpose equals rank of d(...)_0
        ranks.append(rat_rank(rank_rows))
        if j < r_max:
            g = eta_derive(eta, g)
    return SingularChainReport(tuple(values), tuple(ranks))
