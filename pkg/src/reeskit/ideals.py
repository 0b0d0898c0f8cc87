"""Ideal calculus over polynomial and quotient ring contexts.

An :class:`Ideal` of A = Q[vars]/a is stored through representative
generators in the ambient polynomial ring; every operation reduces to
Groebner computations on the preimage (generators together with the
quotient generators).  Sums, products, powers (memoized), intersections
(auxiliary-variable elimination), colons, regularity tests, and ring
fractions y/x with regular denominator all live here.
"""

from __future__ import annotations

from .groebner import (GroebnerBasis, eliminate_polys, normal_form,
                       reduced_groebner)
from .poly import Elimination, Poly, PolyError, RingCtx, embed

_AUX = "@t"  # internal elimination variable; not expressible in the grammar


class Ideal:
    """Finitely generated ideal of a ring context.

    The generator list is never empty (the zero ideal is ``(0)``); the
    reduced Groebner basis of the preimage is computed lazily and
    cached.  Ideals are immutable values.
    """

    __slots__ = ("ctx", "gens", "_gb", "_powers", "_rees")

    def __init__(self, ctx: RingCtx, gens):
        self.ctx = ctx
        polys = []
        for g in gens:
            p = ctx.coerce(g)
            polys.append(p)
        if not polys:
            polys = [ctx.zero]
        self.gens = tuple(polys)
        self._gb = None
        self._powers = None
        self._rees = None

    # -- canonical data ----------------------------------------------------

    @property
    def gb(self) -> GroebnerBasis:
        """Reduced Groebner basis of the preimage ideal (cached)."""
        if self._gb is None:
            self._gb = reduced_groebner(
                list(self.gens) + list(self.ctx.quotient),
                ctx=self.ctx.ambient)
        return self._gb

    @property
    def basis_gens(self):
        """Canonical small generating set: the reduced GB elements."""
        els = self.gb.elements
        return els if els else (self.ctx.zero,)

    @property
    def is_zero(self) -> bool:
        if self.ctx.is_quotient:
            return all(normal_form(g, self.ctx.quotient_gb()).is_zero
                       for g in self.gens)
        return all(g.is_zero for g in self.gens)

    @property
    def is_unit(self) -> bool:
        return self.gb.is_unit

    def _check_ctx(self, other: "Ideal"):
        if self.ctx is not other.ctx and self.ctx != other.ctx:
            raise PolyError("ideals live in different ring contexts")

    def __repr__(self):
        inside = ", ".join(str(g) for g in self.gens)
        return f"({inside})"

    # -- operator sugar ------------------------------------------------------

    def __add__(self, other):
        return ideal_sum(self, other)

    def __mul__(self, other):
        return ideal_product(self, other)

    def __pow__(self, n):
        return ideal_power(self, n)

    def __contains__(self, f):
        return ideal_member(f, self)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return ideal_equal(self, other)

    __hash__ = None

    def intersect(self, other):
        return ideal_intersect(self, other)

    def colon(self, other):
        return ideal_colon(self, other)


# ---------------------------------------------------------------------------
# basic operations


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    I._check_ctx(J)
    return Ideal(I.ctx, list(I.gens) + list(J.gens))


def ideal_product(I: Ideal, J: Ideal) -> Ideal:
    I._check_ctx(J)
    a = [g for g in I.basis_gens if not g.is_zero]
    b = [g for g in J.basis_gens if not g.is_zero]
    return Ideal(I.ctx, [x * y for x in a for y in b])


def ideal_power(I: Ideal, n: int) -> Ideal:
    """I**n, with all lower powers memoized on the ideal (I**0 = (1))."""
    if n < 0:
        raise PolyError("negative ideal power")
    if I._powers is None:
        I._powers = {0: Ideal(I.ctx, [I.ctx.one]), 1: I}
    powers = I._powers
    top = max(powers)
    while top < n:
        powers[top + 1] = ideal_product(powers[top], I)
        top += 1
    return powers[n]


def ideal_member(f, I: Ideal) -> bool:
    """True iff f lies in I (quotient semantics via the preimage basis)."""
    f = I.ctx.coerce(f)
    return I.gb.contains(f)


def ideal_equal(I: Ideal, J: Ideal) -> bool:
    """True iff the reduced preimage bases coincide elementwise."""
    I._check_ctx(J)
    return I.gb.elements == J.gb.elements


def ideal_contains(I: Ideal, J: Ideal) -> bool:
    """True iff J ⊆ I."""
    I._check_ctx(J)
    return all(ideal_member(g, I) for g in J.gens)


# ---------------------------------------------------------------------------
# intersection and colon


def _aux_ring(ctx: RingCtx) -> RingCtx:
    return RingCtx((_AUX,) + ctx.vars, Elimination(1), _internal=True)


def _intersect_preimages(gens_a, gens_b, ctx: RingCtx):
    """Generators of (gens_a) ∩ (gens_b) inside the ambient polynomial ring."""
    amb = ctx.ambient
    ring = _aux_ring(amb)
    positions = tuple(range(1, len(ring.vars)))
    t = ring.var(_AUX)
    one_minus_t = ring.one - t
    lifted = [t * embed(g, ring, positions) for g in gens_a if not g.is_zero]
    lifted += [one_minus_t * embed(g, ring, positions)
               for g in gens_b if not g.is_zero]
    if not lifted:
        return []
    target, kept = eliminate_polys(lifted, ring, 1, target_order=amb.order)
    return [g.in_ctx(amb) for g in kept]


def ideal_intersect(I: Ideal, J: Ideal) -> Ideal:
    """I ∩ J via the auxiliary-variable trick t·I + (1−t)·J."""
    I._check_ctx(J)
    if I.is_zero or J.is_zero:
        return Ideal(I.ctx, [I.ctx.zero])
    gens = _intersect_preimages(I.basis_gens, J.basis_gens, I.ctx)
    return Ideal(I.ctx, gens)


def exact_divide(h: Poly, g: Poly) -> Poly:
    """The exact quotient h/g in the polynomial ring (h must be a multiple)."""
    if g.is_zero:
        raise PolyError("division by the zero polynomial")
    ctx = h.ctx
    quotient = {}
    r = h
    glm, glc = g.lm, g.lc
    while not r.is_zero:
        m = r.lm
        e = tuple(a - b for a, b in zip(m, glm))
        if any(x < 0 for x in e):
            raise PolyError("inexact polynomial division")
        c = r.lc / glc
        quotient[e] = c
        step = Poly(ctx, {tuple(a + b for a, b in zip(e, ge)): c * gc
                          for ge, gc in g.terms.items()}, _trust=True)
        r = r - step
    return Poly(ctx, quotient, _trust=True)


def ideal_colon(I: Ideal, J: Ideal) -> Ideal:
    """(I : J) = { a : a·J ⊆ I }, computed on preimages.

    For each generator g of J, ((I + a) : g) equals ((I + a) ∩ (g)) / g
    in the ambient polynomial ring; the results are intersected.
    """
    I._check_ctx(J)
    ctx = I.ctx
    divisors = [g for g in J.gens if not g.is_zero]
    if not divisors:
        raise PolyError("colon by the zero ideal")
    result = None
    for g in divisors:
        meet = _intersect_preimages(I.basis_gens, [g], ctx)
        quotients = [exact_divide(h, g) for h in meet]
        part = Ideal(ctx, quotients)
        result = part if result is None else ideal_intersect(result, part)
    return result


# ---------------------------------------------------------------------------
# regularity


def is_regular_element(f, ctx: RingCtx) -> bool:
    """True iff f is a non zero divisor of the ring of ``ctx``.

    An element that is zero in the quotient is reported as not regular.
    """
    f = ctx.coerce(f)
    if not ctx.is_quotient:
        return not f.is_zero
    if normal_form(f, ctx.quotient_gb()).is_zero:
        return False
    amb = ctx.ambient
    q = Ideal(amb, list(ctx.quotient) or [amb.zero])
    if q.is_zero:
        return True
    c = ideal_colon(q, Ideal(amb, [f]))
    return ideal_equal(c, q)


def _combination_candidates(gens, ctx: RingCtx, trials: int):
    """Deterministic Q-linear combinations 1, t, t^2, ... of the generators."""
    for t in range(1, trials + 1):
        combo = ctx.zero
        scale = 1
        for g in gens:
            combo = combo + g.scale(scale)
            scale *= t
        yield combo


def is_regular_ideal(I: Ideal, trials: int = 16):
    """A regular element of I, if one is found within the search budget.

    Tries the generators, then generators of I**n for n <= 3, then
    deterministic linear combinations of the generators; returns None
    when nothing regular was found within the budget.
    """
    seen = set()
    candidates = list(I.gens)
    for n in (2, 3):
        candidates.extend(ideal_power(I, n).gens)
    candidates.extend(_combination_candidates(I.gens, I.ctx, trials))
    for g in candidates:
        if g.is_zero or g in seen:
            continue
        seen.add(g)
        if is_regular_element(g, I.ctx):
            return g
    return None


# ---------------------------------------------------------------------------
# elimination on ideals


def eliminate(I: Ideal, first_k: int) -> Ideal:
    """I ∩ Q[vars[first_k:]] as an ideal of the contracted polynomial ring."""
    if I.ctx.is_quotient:
        raise PolyError("eliminate expects a polynomial (non-quotient) context")
    target, kept = eliminate_polys(list(I.gens), I.ctx, first_k)
    tctx = RingCtx(target.vars, target.order, _internal=True)
    return Ideal(tctx, [g.in_ctx(tctx) for g in kept])


# ---------------------------------------------------------------------------
# fractions


class Fraction:
    """A ring fraction num/den whose denominator is a regular element."""

    __slots__ = ("ctx", "num", "den")

    def __init__(self, ctx: RingCtx, num, den):
        self.ctx = ctx
        self.num = ctx.coerce(num)
        self.den = ctx.coerce(den)
        if not is_regular_element(self.den, ctx):
            raise PolyError(f"denominator {self.den} is not a regular element")

    def __mul__(self, other: "Fraction") -> "Fraction":
        if self.ctx != other.ctx:
            raise PolyError("fractions live in different ring contexts")
        return Fraction(self.ctx, self.num * other.num, self.den * other.den)

    def __add__(self, other: "Fraction") -> "Fraction":
        if self.ctx != other.ctx:
            raise PolyError("fractions live in different ring contexts")
        num = self.num * other.den + other.num * self.den
        return Fraction(self.ctx, num, self.den * other.den)

    def __repr__(self):
        return f"({self.num})/({self.den})"
