"""Exact sparse multivariate polynomials over Q.

Coefficients are ``fractions.Fraction`` values (always in lowest terms,
positive denominator, zero is 0/1); no floating point appears anywhere.
Monomials are exponent tuples owned by a :class:`RingCtx`; a polynomial
is an immutable map monomial -> coefficient with no zero entries, whose
terms iterate in strictly decreasing order of the ring's monomial order.

The module also provides the monomial orders used by the rest of the
package (lex, degrevlex, elimination blocks, T-graded) and the text
parser/printer for polynomial expressions.

Grammar (ASCII, whitespace insignificant)::

    poly  := '-'? term (('+'|'-') term)*
    term  := coeff? ('*'? var ('^' uint)?)*
    coeff := uint | uint '/' uint
    var   := [A-Za-z][A-Za-z0-9_]*

Printing emits terms in decreasing order of the active monomial order,
coefficients in lowest terms with ``p/q`` notation, and no unary ``+``;
``parse(print(f)) == f`` for every polynomial ``f``.
"""

from __future__ import annotations

import re
from fractions import Fraction

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)

# Exponents are checked against this bound on every product; corpus
# degrees are tiny, so hitting it means a runaway computation.
MAX_EXPONENT = 1 << 30


class PolyError(Exception):
    """Arithmetic, context, or resource error on polynomial data."""


class ParseError(PolyError):
    """Syntax error in a polynomial expression; carries the position."""

    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos} in {text!r}")
        self.message = message
        self.text = text
        self.pos = pos


# ---------------------------------------------------------------------------
# monomial orders


def _degrevlex_key(exps):
    total = 0
    for e in exps:
        total += e
    return (total, tuple(-e for e in reversed(exps)))


class MonomialOrder:
    """Total, multiplicative well-order on exponent vectors.

    Instances provide :meth:`key`, mapping an exponent tuple to a
    sortable key; ``key(u) < key(v)`` iff the monomial ``u`` precedes
    ``v``.  Orders compare equal by their ``tag``.
    """

    tag = "?"

    def key(self, exps):
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and self.tag == other.tag

    def __hash__(self):
        return hash(self.tag)

    def __repr__(self):
        return self.tag


class Lex(MonomialOrder):
    tag = "lex"

    def key(self, exps):
        return tuple(exps)


class DegRevLex(MonomialOrder):
    tag = "degrevlex"

    def key(self, exps):
        return _degrevlex_key(exps)


class Elimination(MonomialOrder):
    """Block order eliminating the first ``block`` variables.

    Any monomial involving one of the first ``block`` variables exceeds
    every monomial in the remaining ones; within each block the
    comparison is degrevlex.
    """

    def __init__(self, block: int):
        if block < 0:
            raise ValueError("elimination block size must be non-negative")
        self.block = block
        self.tag = f"elim({block})"

    def key(self, exps):
        k = self.block
        return (_degrevlex_key(exps[:k]), _degrevlex_key(exps[k:]))


class TGraded(MonomialOrder):
    """Compares by total degree in the trailing ``tcount`` variables first.

    Ties are broken by ``inner`` (degrevlex on the full exponent vector
    by default).  Reductions of polynomials homogeneous in the trailing
    block stay homogeneous under this order.
    """

    def __init__(self, tcount: int, inner: MonomialOrder | None = None):
        if tcount < 0:
            raise ValueError("trailing block size must be non-negative")
        self.tcount = tcount
        self.inner = inner if inner is not None else DegRevLex()
        self.tag = f"tgraded({tcount};{self.inner.tag})"

    def key(self, exps):
        t = 0
        for e in exps[len(exps) - self.tcount:]:
            t += e
        return (t, self.inner.key(exps))


ORDERS = {"lex": Lex(), "degrevlex": DegRevLex()}


# ---------------------------------------------------------------------------
# ring contexts

_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


class RingCtx:
    """Q[vars] with a monomial order, optionally modulo a quotient ideal.

    With ``quotient`` generators g1, ..., gk the context represents the
    ring Q[vars]/(g1, ..., gk); all computations happen on preimages in
    the ambient polynomial ring.  Contexts are immutable.
    """

    __slots__ = ("vars", "order", "quotient", "_index", "_ambient", "_qgb")

    def __init__(self, vars, order: MonomialOrder | None = None,
                 quotient=None, _internal: bool = False):
        if isinstance(vars, str):
            vars = tuple(v.strip() for v in vars.split(",") if v.strip())
        vars = tuple(vars)
        if not vars:
            raise ValueError("a ring context needs at least one variable")
        if not _internal:
            for v in vars:
                if not _NAME_RE.match(v):
                    raise ValueError(f"invalid variable name {v!r}")
        if len(set(vars)) != len(vars):
            raise ValueError("duplicate variable names")
        self.vars = vars
        self.order = order if order is not None else DegRevLex()
        self._index = {v: i for i, v in enumerate(vars)}
        self._qgb = None
        if quotient:
            self._ambient = RingCtx(vars, self.order, _internal=_internal)
            gens = []
            for g in quotient:
                p = self._ambient.coerce(g)
                if not p.is_zero:
                    gens.append(p)
            self.quotient = tuple(gens)
        else:
            self._ambient = self
            self.quotient = ()

    # -- identity ----------------------------------------------------------

    @property
    def ambient(self) -> "RingCtx":
        """The underlying polynomial ring (self when no quotient)."""
        return self._ambient

    @property
    def is_quotient(self) -> bool:
        return bool(self.quotient)

    def _poly_key(self):
        return (self.vars, self.order.tag)

    def _full_key(self):
        qk = tuple(sorted(tuple(sorted(g.terms.items())) for g in self.quotient))
        return (self.vars, self.order.tag, qk)

    def same_poly_ring(self, other: "RingCtx") -> bool:
        return self is other or self._poly_key() == other._poly_key()

    def __eq__(self, other):
        if not isinstance(other, RingCtx):
            return NotImplemented
        return self is other or self._full_key() == other._full_key()

    def __hash__(self):
        return hash((self.vars, self.order.tag, len(self.quotient)))

    def __repr__(self):
        base = f"Q[{','.join(self.vars)}]"
        if self.quotient:
            return base + "/(" + ", ".join(str(g) for g in self.quotient) + ")"
        return base

    # -- construction helpers ----------------------------------------------

    def with_quotient(self, gens) -> "RingCtx":
        """This ring modulo the additional generators ``gens``."""
        allgens = list(self.quotient) + [self._ambient.coerce(g) for g in gens]
        return RingCtx(self.vars, self.order, quotient=allgens, _internal=True)

    def with_order(self, order: MonomialOrder) -> "RingCtx":
        if order == self.order:
            return self
        return RingCtx(self.vars, order,
                       quotient=self.quotient or None, _internal=True)

    def quotient_gb(self):
        """Reduced Groebner basis of the quotient ideal (cached)."""
        if self._qgb is None:
            from .groebner import reduced_groebner
            self._qgb = reduced_groebner(self.quotient, ctx=self._ambient)
        return self._qgb

    # -- element constructors -----------------------------------------------

    def poly(self, terms) -> "Poly":
        """Polynomial from a mapping exponent-tuple -> coefficient."""
        return Poly(self._ambient, terms)

    @property
    def zero(self) -> "Poly":
        return Poly(self._ambient, {}, _trust=True)

    @property
    def one(self) -> "Poly":
        return self.const(1)

    def const(self, c) -> "Poly":
        c = Fraction(c)
        if c == 0:
            return self.zero
        n = len(self.vars)
        return Poly(self._ambient, {(0,) * n: c}, _trust=True)

    def var(self, name: str) -> "Poly":
        i = self._index.get(name)
        if i is None:
            raise PolyError(f"unknown variable {name!r} in {self!r}")
        exps = [0] * len(self.vars)
        exps[i] = 1
        return Poly(self._ambient, {tuple(exps): ONE}, _trust=True)

    def gens_polys(self):
        """The variables of the ring, as polynomials."""
        return tuple(self.var(v) for v in self.vars)

    def parse(self, text: str) -> "Poly":
        return parse_poly(text, self)

    def coerce(self, obj) -> "Poly":
        """Accept a Poly over the same variables, a string, or a scalar."""
        if isinstance(obj, Poly):
            return obj.in_ctx(self._ambient)
        if isinstance(obj, str):
            return self.parse(obj)
        if isinstance(obj, (int, Fraction)):
            return self.const(obj)
        raise PolyError(f"cannot interpret {obj!r} as a polynomial")


# ---------------------------------------------------------------------------
# polynomials


class Poly:
    """Canonical sparse polynomial bound to the ambient ring of a context."""

    __slots__ = ("ctx", "terms", "_sorted", "_hash")

    def __init__(self, ctx: RingCtx, terms, _trust: bool = False):
        ctx = ctx.ambient
        if not _trust:
            n = len(ctx.vars)
            clean = {}
            for exps, c in dict(terms).items():
                exps = tuple(int(e) for e in exps)
                if len(exps) != n:
                    raise PolyError("exponent vector length mismatch")
                if any(e < 0 for e in exps):
                    raise PolyError("negative exponent")
                c = Fraction(c)
                if c != 0:
                    clean[exps] = c
            terms = clean
        self.ctx = ctx
        self.terms = terms
        self._sorted = None
        self._hash = None

    # -- basic structure -----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    @property
    def sorted_terms(self):
        """Terms as ((exps, coeff), ...) in strictly decreasing order."""
        if self._sorted is None:
            keyf = self.ctx.order.key
            self._sorted = tuple(
                sorted(self.terms.items(), key=lambda t: keyf(t[0]), reverse=True))
        return self._sorted

    @property
    def lm(self):
        """Leading monomial (exponent tuple)."""
        if not self.terms:
            raise PolyError("the zero polynomial has no leading monomial")
        return self.sorted_terms[0][0]

    @property
    def lc(self) -> Fraction:
        return self.sorted_terms[0][1]

    @property
    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, positions) -> int:
        """Total degree in the listed variable positions (-1 for zero)."""
        if not self.terms:
            return -1
        return max(sum(e[i] for i in positions) for e in self.terms)

    def is_homogeneous_in(self, positions) -> bool:
        degs = {sum(e[i] for i in positions) for e in self.terms}
        return len(degs) <= 1

    def coefficient(self, exps) -> Fraction:
        return self.terms.get(tuple(exps), ZERO)

    # -- arithmetic -----------------------------------------------------------

    def _check_ring(self, other: "Poly"):
        if not self.ctx.same_poly_ring(other.ctx):
            raise PolyError(
                f"mismatched ring contexts: {self.ctx!r} vs {other.ctx!r}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ctx.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        self._check_ring(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, ZERO) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Poly(self.ctx, out, _trust=True)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ctx, {e: -c for e, c in self.terms.items()}, _trust=True)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ctx.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        self._check_ring(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e)
                s = c1 * c2 if s is None else s + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        for e in out:
            if any(x > MAX_EXPONENT for x in e):
                raise PolyError(f"exponent overflow beyond {MAX_EXPONENT}")
        return Poly(self.ctx, out, _trust=True)

    __rmul__ = __mul__

    def scale(self, c) -> "Poly":
        c = Fraction(c)
        if c == 0:
            return self.ctx.zero
        return Poly(self.ctx, {e: c * v for e, v in self.terms.items()}, _trust=True)

    def __pow__(self, e: int):
        if e < 0:
            raise PolyError("negative power of a polynomial")
        # repeated squaring; f**0 == 1 for every f, including 0
        result = self.ctx.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base2 = e >> 1
            if base2:
                base = base * base
            e = base2
        return result

    def monic(self) -> "Poly":
        if self.is_zero:
            return self
        c = self.lc
        if c == 1:
            return self
        return self.scale(1 / c)

    # -- identity --------------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ctx.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ctx.same_poly_ring(other.ctx) and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def canonical_key(self):
        """Deterministic sort key: term-by-term (order key, coefficient)."""
        keyf = self.ctx.order.key
        return tuple((keyf(e), c) for e, c in self.sorted_terms)

    # -- movement between contexts ----------------------------------------------

    def in_ctx(self, ctx: RingCtx) -> "Poly":
        ctx = ctx.ambient
        if self.ctx is ctx:
            return self
        if self.ctx.vars != ctx.vars:
            raise PolyError(
                f"cannot move polynomial from {self.ctx!r} to {ctx!r}")
        return Poly(ctx, self.terms, _trust=True)

    def __str__(self):
        return poly_str(self)

    __repr__ = __str__


# ---------------------------------------------------------------------------
# context-change helpers


def embed(poly: Poly, target: RingCtx, positions) -> Poly:
    """Re-express ``poly`` in ``target``; ``positions[i]`` is the target
    index of source variable ``i``."""
    target = target.ambient
    n = len(target.vars)
    out = {}
    for e, c in poly.terms.items():
        exps = [0] * n
        for i, x in enumerate(e):
            if x:
                exps[positions[i]] = x
        out[tuple(exps)] = c
    return Poly(target, out, _trust=True)


def contract(poly: Poly, target: RingCtx, positions) -> Poly:
    """Inverse of :func:`embed`: keep the source variables listed in
    ``positions`` (all other exponents must be zero)."""
    target = target.ambient
    keep = set(positions)
    out = {}
    for e, c in poly.terms.items():
        for i, x in enumerate(e):
            if x and i not in keep:
                raise PolyError("polynomial involves a variable being dropped")
        out[tuple(e[i] for i in positions)] = c
    return Poly(target, out, _trust=True)


def compose(poly: Poly, target: RingCtx, images) -> Poly:
    """Substitute ``images[i]`` (a Poly over ``target``) for variable i."""
    target = target.ambient
    result = target.zero
    for e, c in poly.terms.items():
        term = target.const(c)
        for i, x in enumerate(e):
            if x:
                term = term * images[i] ** x
        result = result + term
    return result


# ---------------------------------------------------------------------------
# parser

_TOKEN_RE = re.compile(r"(\d+)|([A-Za-z][A-Za-z0-9_]*)|([+\-*/^()])")


def _tokenize(text: str):
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {ch!r}", text, pos)
        if m.group(1) is not None:
            tokens.append(("num", m.group(1), pos))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), pos))
        else:
            tokens.append(("op", m.group(3), pos))
        pos = m.end()
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str, ctx: RingCtx):
        self.text = text
        self.ctx = ctx.ambient
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message, tok=None):
        tok = tok if tok is not None else self.peek()
        raise ParseError(message, self.text, tok[2])

    def at_op(self, *ops):
        kind, val, _ = self.peek()
        return kind == "op" and val in ops

    def parse(self) -> Poly:
        total = self.ctx.zero
        sign = 1
        if self.at_op("-"):
            self.take()
            sign = -1
        total = total + self.term().scale(sign)
        while True:
            kind, val, _ = self.peek()
            if kind == "end":
                return total
            if kind == "op" and val in "+-":
                self.take()
                t = self.term()
                total = total + (t if val == "+" else -t)
            else:
                self.fail("expected '+' or '-' between terms")

    def term(self) -> Poly:
        coeff = None
        kind, val, _ = self.peek()
        if kind == "num":
            self.take()
            num = int(val)
            if self.at_op("/"):
                self.take()
                k2, v2, _ = self.peek()
                if k2 != "num":
                    self.fail("expected an integer denominator")
                self.take()
                den = int(v2)
                if den == 0:
                    self.fail("zero denominator")
                coeff = Fraction(num, den)
            else:
                coeff = Fraction(num)
        exps = [0] * len(self.ctx.vars)
        saw_var = False
        while True:
            kind, val, pos = self.peek()
            if kind == "op" and val == "*":
                self.take()
                kind, val, pos = self.peek()
                if kind != "name":
                    self.fail("expected a variable after '*'")
            if kind != "name":
                break
            self.take()
            idx = self.ctx._index.get(val)
            if idx is None:
                raise ParseError(f"unknown variable {val!r}", self.text, pos)
            e = 1
            if self.at_op("^"):
                self.take()
                e = self.exponent()
            exps[idx] += e
            saw_var = True
        if coeff is None and not saw_var:
            self.fail("expected a term")
        if coeff is None:
            coeff = ONE
        if coeff == 0:
            return self.ctx.zero
        return Poly(self.ctx, {tuple(exps): coeff}, _trust=True)

    def exponent(self) -> int:
        paren = False
        if self.at_op("("):
            self.take()
            paren = True
        if self.at_op("-"):
            self.fail("negative exponent")
        kind, val, _ = self.peek()
        if kind != "num":
            self.fail("expected a non-negative integer exponent")
        self.take()
        if paren:
            if not self.at_op(")"):
                self.fail("expected ')'")
            self.take()
        if self.at_op("/"):
            self.fail("non-integer exponent")
        return int(val)


def parse_poly(text: str, ctx: RingCtx) -> Poly:
    """Parse ``text`` into a canonical polynomial over ``ctx``."""
    return _Parser(text, ctx).parse()


# ---------------------------------------------------------------------------
# printer


def _monomial_str(exps, names) -> str:
    parts = []
    for name, e in zip(names, exps):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def poly_str(p: Poly) -> str:
    if p.is_zero:
        return "0"
    names = p.ctx.vars
    pieces = []
    for i, (exps, c) in enumerate(p.sorted_terms):
        mono = _monomial_str(exps, names)
        a = abs(c)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if i == 0:
            pieces.append(body if c > 0 else "-" + body)
        else:
            pieces.append((" + " if c > 0 else " - ") + body)
    return "".join(pieces)
