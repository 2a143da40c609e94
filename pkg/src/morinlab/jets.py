"""Truncated multivariate power series over the exact rationals.

A Jet is the d-jet of a function-germ at the origin: a sparse map from
exponent tuples to nonzero rational coefficients, together with the order
d up to which the coefficients are trustworthy.  Every operation tracks
the order: products keep the minimum of the input orders, a partial
derivative loses one order.  Values are immutable after construction and
all operations are pure.

Internally each monomial is stored as one integer: 5 bits per variable
plus the total degree in the top field, so multiplying monomials is a
single integer addition (no carries occur because every exponent is
bounded by the truncation order, which is capped at 31).
"""

from __future__ import annotations

from typing import Mapping, Sequence

from .errors import DimensionError, SingularMatrixError
from .rationals import ONE, QQ, ZERO, rat_str

_MAX_ORDER = 31
_BITS = 5
_MASK = 31


def _check_order(order: int) -> None:
    if order < 0:
        raise DimensionError("jet order must be >= 0")
    if order > _MAX_ORDER:
        raise DimensionError(f"truncation orders above {_MAX_ORDER} are not supported")


def _pack(expo: Sequence[int], num_vars: int) -> int:
    key = sum(expo) << (_BITS * num_vars)
    for i, e in enumerate(expo):
        key |= e << (_BITS * i)
    return key


def _unpack(key: int, num_vars: int) -> tuple:
    return tuple((key >> (_BITS * i)) & _MASK for i in range(num_vars))


class Jet:
    __slots__ = ("num_vars", "order", "pcoeffs")

    def __init__(self, num_vars: int, order: int, coeffs: Mapping | None = None):
        if num_vars < 1:
            raise DimensionError("jet needs at least one variable")
        _check_order(order)
        clean = {}
        if coeffs:
            for expo, c in coeffs.items():
                expo = tuple(expo)
                if len(expo) != num_vars or any(e < 0 for e in expo):
                    raise DimensionError(f"bad exponent {expo} for {num_vars} variables")
                if sum(expo) > order:
                    continue
                c = QQ(c)
                if c:
                    clean[_pack(expo, num_vars)] = c
        object.__setattr__(self, "num_vars", num_vars)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "pcoeffs", clean)

    @classmethod
    def _raw(cls, num_vars: int, order: int, pcoeffs: dict) -> "Jet":
        """Internal constructor; pcoeffs must already be packed and clean."""
        self = object.__new__(cls)
        object.__setattr__(self, "num_vars", num_vars)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "pcoeffs", pcoeffs)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("Jet is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, num_vars: int, order: int) -> "Jet":
        _check_order(order)
        return cls._raw(num_vars, order, {})

    @classmethod
    def const(cls, num_vars: int, order: int, value) -> "Jet":
        _check_order(order)
        value = QQ(value)
        if not value:
            return cls.zero(num_vars, order)
        return cls._raw(num_vars, order, {0: value})

    @classmethod
    def variable(cls, num_vars: int, order: int, k: int) -> "Jet":
        """The coordinate function x_k (1-based)."""
        if not 1 <= k <= num_vars:
            raise DimensionError(f"variable index {k} out of range 1..{num_vars}")
        if order < 1:
            raise DimensionError("order must be >= 1 to represent a variable")
        _check_order(order)
        key = (1 << (_BITS * num_vars)) | (1 << (_BITS * (k - 1)))
        return cls._raw(num_vars, order, {key: ONE})

    @classmethod
    def monomial(cls, num_vars: int, order: int, expo: Sequence[int], coeff=1) -> "Jet":
        return cls(num_vars, order, {tuple(expo): coeff})

    # -- queries ------------------------------------------------------

    @property
    def coeffs(self) -> dict:
        """Exponent-tuple view of the coefficients (built on demand)."""
        nv = self.num_vars
        return {_unpack(k, nv): c for k, c in self.pcoeffs.items()}

    def constant_term(self):
        return self.pcoeffs.get(0, ZERO)

    def linear_coeffs(self) -> list:
        """Gradient at the origin: coefficient of x_k for k = 1..num_vars."""
        base = 1 << (_BITS * self.num_vars)
        return [self.pcoeffs.get(base | (1 << (_BITS * k)), ZERO)
                for k in range(self.num_vars)]

    def is_zero(self) -> bool:
        return not self.pcoeffs

    def degree(self) -> int:
        """Total degree of the highest stored monomial (-1 for the zero jet)."""
        shift = _BITS * self.num_vars
        return max((k >> shift for k in self.pcoeffs), default=-1)

    def terms(self):
        """(exponent tuple, coefficient) pairs in graded-lex order."""
        nv = self.num_vars
        items = [(_unpack(k, nv), c) for k, c in self.pcoeffs.items()]
        return sorted(items, key=lambda kv: (sum(kv[0]), kv[0]))

    # -- arithmetic ---------------------------------------------------

    def _check_compatible(self, other: "Jet"):
        if self.num_vars != other.num_vars:
            raise DimensionError(
                f"variable count mismatch: {self.num_vars} vs {other.num_vars}")

    def __add__(self, other):
        if not isinstance(other, Jet):
            other = Jet.const(self.num_vars, self.order, other)
        self._check_compatible(other)
        order = min(self.order, other.order)
        shift = _BITS * self.num_vars
        out = {k: c for k, c in self.pcoeffs.items() if k >> shift <= order}
        for k, c in other.pcoeffs.items():
            if k >> shift > order:
                continue
            s = out.get(k, ZERO) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return Jet._raw(self.num_vars, order, out)

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        return Jet._raw(self.num_vars, self.order,
                        {k: -c for k, c in self.pcoeffs.items()})

    def __sub__(self, other):
        if not isinstance(other, Jet):
            other = Jet.const(self.num_vars, self.order, other)
        return self.__add__(-other)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def scale(self, value) -> "Jet":
        value = QQ(value)
        if not value:
            return Jet.zero(self.num_vars, self.order)
        return Jet._raw(self.num_vars, self.order,
                        {k: c * value for k, c in self.pcoeffs.items()})

    def __mul__(self, other):
        if not isinstance(other, Jet):
            return self.scale(other)
        self._check_compatible(other)
        order = min(self.order, other.order)
        if not self.pcoeffs or not other.pcoeffs:
            return Jet.zero(self.num_vars, order)
        # Bucket the shorter factor by total degree so the inner loop can
        # skip everything the truncation would kill anyway.
        a, b = self.pcoeffs, other.pcoeffs
        if len(a) < len(b):
            a, b = b, a
        shift = _BITS * self.num_vars
        buckets: dict[int, list] = {}
        for k, c in b.items():
            buckets.setdefault(k >> shift, []).append((k, c))
        out: dict = {}
        get = out.get
        for ka, ca in a.items():
            da = ka >> shift
            if da > order:
                continue
            for db in range(order - da + 1):
                bucket = buckets.get(db)
                if not bucket:
                    continue
                for kb, cb in bucket:
                    key = ka + kb
                    s = get(key, ZERO) + ca * cb
                    if s:
                        out[key] = s
                    else:
                        del out[key]
        return Jet._raw(self.num_vars, order, out)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative jet powers go through jet_inv")
        result = Jet.const(self.num_vars, self.order, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def derive(self, k: int) -> "Jet":
        """Formal partial derivative by x_k (1-based); order drops by one."""
        if not 1 <= k <= self.num_vars:
            raise DimensionError(f"variable index {k} out of range 1..{self.num_vars}")
        order = max(self.order - 1, 0)
        shift = _BITS * self.num_vars
        vshift = _BITS * (k - 1)
        drop = (1 << shift) | (1 << vshift)
        out = {}
        for key, c in self.pcoeffs.items():
            e = (key >> vshift) & _MASK
            if not e:
                continue
            key2 = key - drop
            if key2 >> shift > order:
                continue
            out[key2] = c * e
        return Jet._raw(self.num_vars, order, out)

    def truncate(self, order: int) -> "Jet":
        """Forget information above the given (lower or equal) order."""
        if order >= self.order:
            return self
        _check_order(order)
        shift = _BITS * self.num_vars
        out = {k: c for k, c in self.pcoeffs.items() if k >> shift <= order}
        return Jet._raw(self.num_vars, order, out)

    # -- comparison / display ----------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Jet):
            return NotImplemented
        return (self.num_vars == other.num_vars
                and self.order == other.order
                and self.pcoeffs == other.pcoeffs)

    def __hash__(self):
        return hash((self.num_vars, self.order,
                     frozenset(self.pcoeffs.items())))

    def __repr__(self):
        return f"Jet({self.num_vars}, {self.order}, {self!s})"

    def __str__(self):
        if not self.pcoeffs:
            return "0"
        parts = []
        for e, c in self.terms():
            factors = []
            if c != 1 or not any(e):
                factors.append(rat_str(c))
            for i, p in enumerate(e):
                if p == 1:
                    factors.append(f"x{i + 1}")
                elif p > 1:
                    factors.append(f"x{i + 1}^{p}")
            parts.append("*".join(factors))
        return " + ".join(parts)


# -- composition ------------------------------------------------------


def jet_compose_components(components: Sequence[Jet], g: Sequence[Jet]) -> list[Jet]:
    """Substitute the tuple g into each jet of `components`.

    components are jets in len(g) variables; every g_i shares a variable
    count and order, and has zero constant term (so truncation commutes
    with substitution).  Products of g-powers are cached per exponent
    tuple, which keeps the cost polynomial even for dense inputs.
    """
    if not g:
        raise DimensionError("empty substitution tuple")
    k = g[0].num_vars
    order = min(min(c.order for c in components), min(gi.order for gi in g))
    for gi in g:
        if gi.num_vars != k:
            raise DimensionError("substitution components disagree on variable count")
        if gi.constant_term():
            raise SingularMatrixError("substitution must have zero constant term")
    for c in components:
        if c.num_vars != len(g):
            raise DimensionError(
                f"jet in {c.num_vars} variables composed with {len(g)} components")
    gtrunc = [gi.truncate(order) for gi in g]
    one = Jet.const(k, order, 1)
    cache: dict[tuple, Jet] = {(0,) * len(g): one}

    def product(expo: tuple) -> Jet:
        val = cache.get(expo)
        if val is not None:
            return val
        i = next(idx for idx, e in enumerate(expo) if e)
        prev = expo[:i] + (expo[i] - 1,) + expo[i + 1:]
        val = product(prev) * gtrunc[i]
        cache[expo] = val
        return val

    out = []
    for comp in components:
        acc: dict = {}
        for expo, c in comp.terms():
            if sum(expo) > order:
                continue
            for key2, c2 in product(expo).pcoeffs.items():
                s = acc.get(key2, ZERO) + c * c2
                if s:
                    acc[key2] = s
                else:
                    del acc[key2]
        out.append(Jet._raw(k, order, acc))
    return out


# -- inversion and linear algebra over the jet ring -------------------


def jet_inv(a: Jet) -> Jet:
    """Multiplicative inverse of a jet with nonzero constant term."""
    a0 = a.constant_term()
    if not a0:
        raise SingularMatrixError("jet with zero constant term has no inverse")
    b = Jet.const(a.num_vars, a.order, 1 / a0)
    two = Jet.const(a.num_vars, a.order, 2)
    # Newton iteration doubles the valid order each step.
    known = 0
    while known < a.order:
        b = b * (two - a * b)
        known = 2 * known + 1
    return b


def jet_matrix_solve(A: Sequence[Sequence[Jet]], b: Sequence[Jet]) -> list[Jet]:
    """Solve A x = b over the jet ring; A's constant-term matrix must be invertible."""
    n = len(A)
    if any(len(row) != n for row in A) or len(b) != n:
        raise DimensionError("jet_matrix_solve needs a square system")
    rows = [list(row) + [b[i]] for i, row in enumerate(A)]
    for col in range(n):
        piv = next((r for r in range(col, n) if rows[r][col].constant_term()), None)
        if piv is None:
            raise SingularMatrixError("constant-term matrix is singular")
        rows[col], rows[piv] = rows[piv], rows[col]
        inv = jet_inv(rows[col][col])
        rows[col] = [inv * entry for entry in rows[col]]
        for r in range(n):
            if r == col:
                continue
            factor = rows[r][col]
            if factor.is_zero():
                continue
            rows[r] = [rows[r][j] - factor * rows[col][j] for j in range(n + 1)]
    return [rows[i][n] for i in range(n)]


def jet_det(M: Sequence[Sequence[Jet]], order: int | None = None) -> Jet:
    """Determinant of a square matrix of jets.

    Laplace expansion with shared minors over column subsets: O(2^n n)
    jet products, exact at the common truncation order.  Fine for the
    n <= 8 matrices this package needs.
    """
    n = len(M)
    if n == 0:
        raise DimensionError("empty determinant")
    if any(len(row) != n for row in M):
        raise DimensionError("determinant of a non-square matrix")
    num_vars = M[0][0].num_vars
    if order is None:
        order = min(e.order for row in M for e in row)
    rows = [[e.truncate(order) for e in row] for row in M]
    minors = {0: Jet.const(num_vars, order, 1)}
    for i in range(n):
        nxt: dict[int, Jet] = {}
        for mask, val in minors.items():
            if val.is_zero():
                continue
            idx = 0
            for j in range(n):
                bit = 1 << j
                if mask & bit:
                    idx += 1
                    continue
                entry = rows[i][j]
                if entry.is_zero():
                    continue
                term = val * entry
                if (i + idx) % 2:
                    term = -term
                cur = nxt.get(mask | bit)
                nxt[mask | bit] = term if cur is None else cur + term
        minors = nxt
    full = (1 << n) - 1
    return minors.get(full, Jet.zero(num_vars, order))
