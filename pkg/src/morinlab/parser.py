"""Text formats: germ files and framed-curve files.

Germ grammar (``#`` starts a line comment)::

    map <m> -> <n> order <d> : [expr_1, ..., expr_n]

Expressions use variables x1..xm, rational literals ``p`` or ``p/q``,
operators ``+ - * ^`` (integer exponents >= 1), unary minus, and
parentheses.  Precedence: ``^`` binds tighter than unary minus, which
binds tighter than ``*``, which binds tighter than binary ``+``/``-``;
binary operators are left-associative.  Division only occurs inside a
rational literal.

Framed-curve files use the same expression grammar in the single
variable ``t``::

    planes <n> order <d>
    gamma:  [expr_1, ..., expr_2n]
    delta1: [expr_1, ..., expr_2n]
    ...
    deltaN: [expr_1, ..., expr_2n]
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import ParseError
from .jets import Jet
from .maps import MapJet
from .rationals import QQ, rat_str

# -- expression trees --------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: object  # nonnegative rational


@dataclass(frozen=True)
class Var:
    index: int  # 1-based


@dataclass(frozen=True)
class Neg:
    arg: "Expr"


@dataclass(frozen=True)
class BinOp:
    op: str  # "+", "-", "*"
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int


Expr = Union[Num, Var, Neg, BinOp, Pow]


def expr_to_str(e: Expr, var_name=None) -> str:
    """Canonical rendering; parses back to the identical tree."""
    name = var_name or (lambda k: f"x{k}")
    if isinstance(e, Num):
        return rat_str(e.value)
    if isinstance(e, Var):
        return name(e.index)
    if isinstance(e, Neg):
        return f"(-{expr_to_str(e.arg, var_name)})"
    if isinstance(e, Pow):
        base = expr_to_str(e.base, var_name)
        if isinstance(e.base, Pow):
            base = f"({base})"
        return f"{base}^{e.exponent}"
    assert isinstance(e, BinOp)
    return f"({expr_to_str(e.left, var_name)} {e.op} {expr_to_str(e.right, var_name)})"


def expr_to_jet(e: Expr, num_vars: int, order: int) -> Jet:
    if isinstance(e, Num):
        return Jet.const(num_vars, order, e.value)
    if isinstance(e, Var):
        return Jet.variable(num_vars, order, e.index)
    if isinstance(e, Neg):
        return -expr_to_jet(e.arg, num_vars, order)
    if isinstance(e, Pow):
        return expr_to_jet(e.base, num_vars, order) ** e.exponent
    a = expr_to_jet(e.left, num_vars, order)
    b = expr_to_jet(e.right, num_vars, order)
    return a + b if e.op == "+" else a - b if e.op == "-" else a * b


def expr_constant_term(e: Expr):
    """Value of the expression with every variable set to zero."""
    if isinstance(e, Num):
        return e.value
    if isinstance(e, Var):
        return QQ(0)
    if isinstance(e, Neg):
        return -expr_constant_term(e.arg)
    if isinstance(e, Pow):
        return expr_constant_term(e.base) ** e.exponent
    a, b = expr_constant_term(e.left), expr_constant_term(e.right)
    return a + b if e.op == "+" else a - b if e.op == "-" else a * b


# -- tokenizer ----------------------------------------------------------


@dataclass(frozen=True)
class Token:
    kind: str   # "int", "name", or a literal symbol
    text: str
    line: int
    col: int


_SYMBOLS = ("->", "+", "-", "*", "^", "/", "(", ")", "[", "]", ",", ":")


def _tokenize(text: str) -> list[Token]:
    tokens = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        i = 0
        while i < len(line):
            ch = line[i]
            if ch == "#":
                break
            if ch.isspace():
                i += 1
                continue
            col = i + 1
            if ch.isdigit():
                j = i
                while j < len(line) and line[j].isdigit():
                    j += 1
                tokens.append(Token("int", line[i:j], lineno, col))
                i = j
                continue
            if ch.isalpha() or ch == "_":
                j = i
                while j < len(line) and (line[j].isalnum() or line[j] == "_"):
                    j += 1
                tokens.append(Token("name", line[i:j], lineno, col))
                i = j
                continue
            for sym in _SYMBOLS:
                if line.startswith(sym, i):
                    tokens.append(Token(sym, sym, lineno, col))
                    i += len(sym)
                    break
            else:
                raise ParseError(f"unexpected character {ch!r}", lineno, col)
    return tokens


class _Parser:
    def __init__(self, tokens: list[Token], var_lookup):
        self.tokens = tokens
        self.pos = 0
        self.var_lookup = var_lookup  # name -> 1-based index or None

    def peek(self) -> Token | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def error(self, msg: str):
        tok = self.peek()
        if tok is None:
            last = self.tokens[-1] if self.tokens else None
            raise ParseError(f"{msg} at end of input",
                             last.line if last else 1,
                             last.col + len(last.text) if last else 1)
        raise ParseError(f"{msg}, found {tok.text!r}", tok.line, tok.col)

    def take(self, kind: str, what: str | None = None) -> Token:
        tok = self.peek()
        if tok is None or tok.kind != kind:
            self.error(f"expected {what or kind!r}")
        self.pos += 1
        return tok

    def take_int(self, what: str) -> int:
        return int(self.take("int", what).text)

    def expr(self) -> Expr:
        node = self.term()
        while (tok := self.peek()) and tok.kind in ("+", "-"):
            self.pos += 1
            node = BinOp(tok.kind, node, self.term())
        return node

    def term(self) -> Expr:
        node = self.factor()
        while (tok := self.peek()) and tok.kind == "*":
            self.pos += 1
            node = BinOp("*", node, self.factor())
        return node

    def factor(self) -> Expr:
        tok = self.peek()
        if tok and tok.kind == "-":
            self.pos += 1
            return Neg(self.factor())
        return self.power()

    def power(self) -> Expr:
        node = self.primary()
        tok = self.peek()
        if tok and tok.kind == "^":
            self.pos += 1
            exp_tok = self.take("int", "a positive integer exponent")
            k = int(exp_tok.text)
            if k < 1:
                raise ParseError("exponent must be >= 1", exp_tok.line, exp_tok.col)
            return Pow(node, k)
        return node

    def primary(self) -> Expr:
        tok = self.peek()
        if tok is None:
            self.error("expected an expression")
        if tok.kind == "int":
            self.pos += 1
            num = QQ(int(tok.text))
            nxt = self.peek()
            if nxt and nxt.kind == "/":
                self.pos += 1
                den_tok = self.take("int", "a denominator")
                den = int(den_tok.text)
                if den == 0:
                    raise ParseError("zero denominator", den_tok.line, den_tok.col)
                num = num / den
            return Num(num)
        if tok.kind == "name":
            idx = self.var_lookup(tok.text)
            if idx is None:
                raise ParseError(f"unknown variable {tok.text!r}", tok.line, tok.col)
            self.pos += 1
            return Var(idx)
        if tok.kind == "(":
            self.pos += 1
            node = self.expr()
            self.take(")", "')'")
            return node
        self.error("expected a number, variable, or '('")

    def expr_list(self, count: int, what: str) -> list[Expr]:
        self.take("[", "'['")
        exprs = [self.expr()]
        while (tok := self.peek()) and tok.kind == ",":
            self.pos += 1
            exprs.append(self.expr())
        self.take("]", "']'")
        if len(exprs) != count:
            last = self.tokens[self.pos - 1]
            raise ParseError(f"{what}: expected {count} expressions, got {len(exprs)}",
                             last.line, last.col)
        return exprs

    def keyword(self, word: str) -> Token:
        tok = self.peek()
        if tok is None or tok.kind != "name" or tok.text != word:
            self.error(f"expected keyword {word!r}")
        self.pos += 1
        return tok

    def at_end(self) -> bool:
        return self.pos == len(self.tokens)


# -- germ files ---------------------------------------------------------


@dataclass(frozen=True)
class GermSource:
    source_dim: int
    target_dim: int
    order: int
    exprs: tuple[Expr, ...]

    def to_text(self) -> str:
        body = ", ".join(expr_to_str(e) for e in self.exprs)
        return (f"map {self.source_dim} -> {self.target_dim} "
                f"order {self.order} : [{body}]")

    def to_map(self) -> MapJet:
        return self.to_map_at_order(self.order)

    def to_map_at_order(self, order: int) -> MapJet:
        comps = tuple(expr_to_jet(e, self.source_dim, order) for e in self.exprs)
        return MapJet(self.source_dim, self.target_dim, comps)


def _germ_var_lookup(m: int):
    def lookup(name: str):
        if name.startswith("x") and name[1:].isdigit():
            k = int(name[1:])
            if 1 <= k <= m:
                return k
        return None
    return lookup


def parse_germ(text: str) -> GermSource:
    p = _Parser(_tokenize(text), lambda name: None)
    p.keyword("map")
    m = p.take_int("source dimension")
    p.take("->", "'->'")
    n = p.take_int("target dimension")
    p.keyword("order")
    order = p.take_int("truncation order")
    p.take(":", "':'")
    if m < 1 or n <= m:
        raise ParseError(f"need 1 <= m < n, got m={m}, n={n}", 1, 1)
    if order < 1:
        raise ParseError(f"order must be >= 1, got {order}", 1, 1)
    p.var_lookup = _germ_var_lookup(m)
    exprs = p.expr_list(n, "component list")
    if not p.at_end():
        p.error("unexpected trailing input")
    for i, e in enumerate(exprs, start=1):
        if expr_constant_term(e):
            raise ParseError(f"component {i} has nonzero constant term "
                             f"{rat_str(expr_constant_term(e))}", 1, 1)
    return GermSource(m, n, order, tuple(exprs))


# -- framed-curve files ---------------------------------------------------


@dataclass(frozen=True)
class FramedCurveSource:
    n: int
    order: int
    gamma: tuple[Expr, ...]
    delta: tuple[tuple[Expr, ...], ...]

    def to_text(self) -> str:
        def row(exprs):
            return "[" + ", ".join(
                expr_to_str(e, var_name=lambda _: "t") for e in exprs) + "]"
        lines = [f"planes {self.n} order {self.order}", f"gamma: {row(self.gamma)}"]
        for i, d in enumerate(self.delta, start=1):
            lines.append(f"delta{i}: {row(d)}")
        return "\n".join(lines)

    def to_framed_curve(self):
        from .ruling import FramedCurve

        def jets(exprs):
            return tuple(expr_to_jet(e, 1, self.order) for e in exprs)

        return FramedCurve(self.n, jets(self.gamma),
                           tuple(jets(d) for d in self.delta))


def parse_framed_curve(text: str) -> FramedCurveSource:
    p = _Parser(_tokenize(text), lambda name: 1 if name == "t" else None)
    p.keyword("planes")
    n = p.take_int("plane dimension")
    p.keyword("order")
    order = p.take_int("truncation order")
    if n < 1:
        raise ParseError(f"plane dimension must be >= 1, got {n}", 1, 1)
    if order < 1:
        raise ParseError(f"order must be >= 1, got {order}", 1, 1)
    p.keyword("gamma")
    p.take(":", "':'")
    gamma = p.expr_list(2 * n, "gamma")
    delta = []
    for i in range(1, n + 1):
        tok = p.keyword(f"delta{i}")
        p.take(":", "':'")
        delta.append(tuple(p.expr_list(2 * n, tok.text)))
    if not p.at_end():
        p.error("unexpected trailing input")
    return FramedCurveSource(n, order, tuple(gamma), tuple(delta))


def germ_from_map(f: MapJet) -> GermSource:
    """Render a MapJet back to a GermSource (sum of monomial terms)."""
    exprs = []
    for c in f.components:
        node: Expr | None = None
        for expo, coef in c.terms():
            factors: list[Expr] = []
            if coef < 0:
                term_coef = -coef
            else:
                term_coef = coef
            if term_coef != 1 or not any(expo):
                factors.append(Num(term_coef))
            for v, d in enumerate(expo, start=1):
                if d == 1:
                    factors.append(Var(v))
                elif d > 1:
                    factors.append(Pow(Var(v), d))
            term: Expr = factors[0]
            for fac in factors[1:]:
                term = BinOp("*", term, fac)
            if node is None:
                node = Neg(term) if coef < 0 else term
            else:
                node = BinOp("-" if coef < 0 else "+", node, term)
        exprs.append(node if node is not None else Num(QQ(0)))
    return GermSource(f.source_dim, f.target_dim, f.order, tuple(exprs))
