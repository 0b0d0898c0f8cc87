"""Reduction numbers, integral degrees of fractions, Artin-Rees
numbers, d-sequence and Valabrega-Valla checks, regularity of the Rees
module via the filter-regular characterization, and the d-sequence
reduction theorem checker.

Searches that are only semi-decidable (is J a reduction? is y/x
integral?) carry an explicit cap and return an unresolved outcome
instead of looping.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .ideals import (Ideal, ideal_colon, ideal_contains,
                     ideal_equal, ideal_intersect, ideal_member, ideal_power,
                     ideal_product, ideal_sum, is_regular_element)
from .poly import Poly, PolyError, RingCtx
from .rees import relation_type, relation_type_mod

DEFAULT_CAP = 32


@dataclass(frozen=True)
class SearchOutcome:
    """Result of a capped search: resolved with a value, or unresolved."""

    value: int | None
    cap: int
    witness: str | None = None

    @property
    def resolved(self) -> bool:
        return self.value is not None

    def __str__(self):
        if self.resolved:
            return str(self.value)
        return f"unresolved(cap={self.cap})"

    def __repr__(self):
        if self.resolved:
            return f"resolved({self.value})"
        return f"unresolved(cap={self.cap})"


def _resolved(value, cap, witness=None):
    return SearchOutcome(value, cap, witness)


def _unresolved(cap, witness=None):
    return SearchOutcome(None, cap, witness)


# ---------------------------------------------------------------------------
# reductions


def is_reduction(J: Ideal, I: Ideal, cap: int = DEFAULT_CAP) -> SearchOutcome:
    """Least n <= cap with I^{n+1} = J·I^n, if any.

    Requires J ⊆ I (checked on generators).
    """
    J._check_ctx(I)
    if not ideal_contains(I, J):
        raise PolyError("the candidate reduction is not contained in the ideal")
    for n in range(cap + 1):
        left = ideal_power(I, n + 1)
        right = ideal_product(J, ideal_power(I, n))
        if ideal_equal(left, right):
            return _resolved(n, cap, witness=f"I^{n + 1} = J*I^{n}")
    return _unresolved(cap)


def reduction_number(I: Ideal, J: Ideal, cap: int = DEFAULT_CAP) -> SearchOutcome:
    """rn_J(I): the least n with I^{n+1} = J·I^n (capped search)."""
    return is_reduction(J, I, cap)


def principal_reduction_candidates(I: Ideal, trials: int = 16):
    """Deterministic candidate elements for a principal reduction of I."""
    from .ideals import _combination_candidates
    seen = set()
    for g in list(I.gens) + list(_combination_candidates(I.gens, I.ctx, trials)):
        if g.is_zero or g in seen:
            continue
        seen.add(g)
        yield g


def find_principal_reduction(I: Ideal, cap: int = DEFAULT_CAP,
                             trials: int = 16, survey: bool = False):
    """First regular g among the candidates with (g) a reduction of I.

    Returns ``(g, outcome)`` or None when nothing was found within the
    budget.  With ``survey=True`` all candidate reductions are collected
    and their reduction numbers are asserted equal (the value of a
    principal reduction does not depend on which one is used) before the
    first is returned.
    """
    found = []
    for g in principal_reduction_candidates(I, trials):
        if not is_regular_element(g, I.ctx):
            continue
        gI = Ideal(I.ctx, [g])
        if not ideal_contains(I, gI):
            continue
        outcome = is_reduction(gI, I, cap)
        if outcome.resolved:
            found.append((g, outcome))
            if not survey:
                break
    if not found:
        return None
    values = {o.value for _, o in found}
    if len(values) != 1:
        raise PolyError(
            "distinct principal reductions produced different reduction "
            f"numbers: {sorted(values)}")
    return found[0]


# ---------------------------------------------------------------------------
# integral degree


def integral_degree_fraction(y: Poly, x: Poly, ctx: RingCtx | None = None,
                             cap: int = DEFAULT_CAP) -> SearchOutcome:
    """id(y/x): least n with x·(x, y)^{n-1} : (y^n) = (1).

    Equals the minimal degree of a monic equation of y/x over the ring,
    and rn_(x)((x, y)) + 1.  The denominator must be regular.
    """
    if ctx is None:
        ctx = x.ctx
    x = ctx.coerce(x)
    y = ctx.coerce(y)
    if not is_regular_element(x, ctx):
        raise PolyError("the denominator must be a regular element")
    I = Ideal(ctx, [x, y])
    xI = Ideal(ctx, [x])
    for n in range(1, cap + 1):
        c = ideal_colon(ideal_product(xI, ideal_power(I, n - 1)),
                        Ideal(ctx, [y ** n]))
        if c.is_unit:
            return _resolved(n, cap, witness=f"x*(x,y)^{n - 1} : y^{n} = (1)")
    return _unresolved(cap)


@dataclass
class SupEstimateReport:
    """Sampled lower bounds for the integral degree of the ring.

    Both maxima are lower bounds for the supremum over all fractions /
    all ideals; ``None`` means the sample was empty ("no data").
    """

    fraction_ids: list = field(default_factory=list)      # (Fraction, SearchOutcome)
    ideal_rns: list = field(default_factory=list)         # (Ideal, Poly, SearchOutcome)
    tie_violations: list = field(default_factory=list)

    @property
    def max_id(self):
        vals = [o.value for _, o in self.fraction_ids if o.resolved]
        return max(vals) if vals else None

    @property
    def max_rn_plus_one(self):
        vals = [o.value + 1 for _, _, o in self.ideal_rns if o.resolved]
        return max(vals) if vals else None

    @property
    def tie_holds(self) -> bool:
        return not self.tie_violations


def integral_degree_sup_estimate(ctx: RingCtx, fractions, ideals,
                                 cap: int = DEFAULT_CAP) -> SupEstimateReport:
    """Lower-bound report: max id over sampled fractions, max rn+1 over
    sampled ideals with principal reductions, and the pointwise tie
    id(y/x) = rn((x, y), (x)) + 1 on every sampled fraction."""
    report = SupEstimateReport()
    for frac in fractions:
        out = integral_degree_fraction(frac.num, frac.den, ctx, cap)
        report.fraction_ids.append((frac, out))
        if out.resolved:
            I = Ideal(ctx, [frac.den, frac.num])
            rn = reduction_number(I, Ideal(ctx, [frac.den]), cap)
            if not rn.resolved or rn.value + 1 != out.value:
                report.tie_violations.append(
                    (frac, out, rn))
    for I in ideals:
        hit = find_principal_reduction(I, cap)
        if hit is not None:
            g, outcome = hit
            report.ideal_rns.append((I, g, outcome))
    return report


# ---------------------------------------------------------------------------
# Artin-Rees numbers


@dataclass(frozen=True)
class ArtinReesReport:
    """Artin-Rees number s_J(a, A; I) for the cyclic pair a ⊆ A.

    ``exact`` is True when the relation-type bound rt_J(I mod a) was
    computed: vanishing beyond the bound is then guaranteed and the
    value is exact rather than window-limited.
    """

    s_value: SearchOutcome
    rt_bound: int | None
    window: int
    exact: bool
    witness: str | None = None


def _artin_rees_module_vanishes(a: Ideal, I: Ideal, J: Ideal, n: int):
    """Whether I^n ∩ a = I(I^{n-1} ∩ a) + (J·I^n ∩ a); returns (bool, witness)."""
    lhs = ideal_intersect(ideal_power(I, n), a)
    rhs = ideal_product(I, ideal_intersect(ideal_power(I, n - 1), a))
    if not J.is_zero:
        rhs = ideal_sum(rhs, ideal_intersect(ideal_product(J, ideal_power(I, n)), a))
    for g in lhs.basis_gens:
        if not ideal_member(g, rhs):
            return False, str(g)
    return True, None


def artin_rees_number(a: Ideal, I: Ideal, J: Ideal,
                      cap: int = DEFAULT_CAP) -> ArtinReesReport:
    """s_J(a, A; I): largest n with a nonvanishing obstruction module.

    The window of checked degrees is 1..rt_J(I mod a) when that bound is
    computable (the result is then exact); otherwise 1..cap, flagged as
    window-limited.
    """
    a._check_ctx(I)
    a._check_ctx(J)
    ctx = a.ctx
    rt_bound = None
    try:
        ctx_mod = ctx.with_quotient([g for g in a.gens if not g.is_zero])
        I_mod = Ideal(ctx_mod, list(I.gens))
        J_mod = Ideal(ctx_mod, list(J.gens))
        rt_bound = relation_type_mod(I_mod, J_mod)
    except PolyError:
        rt_bound = None
    window = rt_bound if rt_bound is not None else cap
    s = 0
    witness = None
    for n in range(1, window + 1):
        ok, w = _artin_rees_module_vanishes(a, I, J, n)
        if not ok:
            s = n
            witness = w
    exact = rt_bound is not None
    outcome = _resolved(s, cap, witness=witness)
    return ArtinReesReport(outcome, rt_bound, window, exact, witness)


# ---------------------------------------------------------------------------
# d-sequences and Valabrega-Valla containments


def d_sequence_check(seq, ctx: RingCtx) -> bool:
    """Whether x_1, ..., x_s is a d-sequence: no member lies in the ideal
    of the others, and ((x_1..x_i) : x_{i+1}) ∩ (x_1..x_s) = (x_1..x_i)
    for every i."""
    seq = [ctx.coerce(g) for g in seq]
    if not seq:
        raise PolyError("empty sequence")
    for j, g in enumerate(seq):
        others = [h for i, h in enumerate(seq) if i != j]
        others_ideal = Ideal(ctx, others or [ctx.zero])
        if ideal_member(g, others_ideal):
            return False
    J = Ideal(ctx, seq)
    for i in range(len(seq)):
        Ji = Ideal(ctx, seq[:i] or [ctx.zero])
        lhs = ideal_intersect(ideal_colon_allow_zero(Ji, seq[i]), J)
        if not ideal_equal(lhs, Ji):
            return False
    return True


def ideal_colon_allow_zero(I: Ideal, g) -> Ideal:
    """(I : g) where I may be the zero ideal (then the annihilator of g)."""
    ctx = I.ctx
    g = ctx.coerce(g)
    return ideal_colon(I, Ideal(ctx, [g]))


def vv_check(prefix, I: Ideal, n: int) -> bool:
    """Valabrega-Valla containment: (prefix) ∩ I^{n+1} = (prefix)·I^n."""
    ctx = I.ctx
    prefix = [ctx.coerce(g) for g in prefix]
    if not prefix:
        return True
    P = Ideal(ctx, prefix)
    lhs = ideal_intersect(P, ideal_power(I, n + 1))
    rhs = ideal_product(P, ideal_power(I, n))
    return ideal_equal(lhs, rhs)


# ---------------------------------------------------------------------------
# regularity of the Rees module via filter-regular sequences


def _filter_condition(I: Ideal, seq, n: int) -> bool:
    """[(x_1..x_{i-1})I^n : x_i] ∩ I^n = (x_1..x_{i-1})I^{n-1} for all i."""
    ctx = I.ctx
    In = ideal_power(I, n)
    for i in range(1, len(seq) + 1):
        Ji1 = Ideal(ctx, seq[:i - 1] or [ctx.zero])
        lhs = ideal_intersect(
            ideal_colon_allow_zero(ideal_product(Ji1, In), seq[i - 1]), In)
        rhs = ideal_product(Ji1, ideal_power(I, n - 1))
        if not ideal_equal(lhs, rhs):
            return False
    return True


def reg_rees(I: Ideal, J: Ideal, cap: int = DEFAULT_CAP) -> SearchOutcome:
    """Regularity of the Rees module of I, via its reduction J.

    Least r >= rn_J(I) such that the filter-regular colon condition
    holds for all n > r.  Exact for a principal reduction with regular
    generator (the condition is automatic); window-checked otherwise,
    with the window recorded in the witness.
    """
    J._check_ctx(I)
    rn = reduction_number(I, J, cap)
    if not rn.resolved:
        raise PolyError(f"not a reduction within cap {cap}")
    r0 = rn.value
    seq = [g for g in J.gens if not g.is_zero]
    if len(seq) == 1 and is_regular_element(seq[0], I.ctx):
        return _resolved(r0, cap, witness="exact: principal regular reduction")
    top = r0 + cap
    worst = r0
    for n in range(r0 + 1, top + 1):
        if not _filter_condition(I, seq, n):
            worst = n
    return _resolved(worst, cap, witness=f"window-checked n <= {top}")


# ---------------------------------------------------------------------------
# the d-sequence reduction theorem


@dataclass
class DSequenceReductionReport:
    """Hypothesis and conclusion record for the d-sequence reduction bound.

    When the generators of the reduction J form a d-sequence, the proper
    prefix is a regular sequence, and the prefix ideals satisfy
    (x_1..x_i) ∩ I^{r+1} = (x_1..x_i)·I^r at r = rn_J(I), then
    rt(I) <= rn_J(I) + 1 and reg of the Rees module equals rn_J(I).
    Conclusions are evaluated only when every hypothesis holds.
    """

    rn: SearchOutcome
    d_sequence_ok: bool
    regular_sequence_ok: bool
    intersection_ok: bool          # hypothesis (iii)
    intersection_failures: list = field(default_factory=list)
    rt: int | None = None
    reg: SearchOutcome | None = None
    rt_bound_ok: bool | None = None
    reg_equals_rn_ok: bool | None = None

    @property
    def hypotheses_hold(self) -> bool:
        return (self.d_sequence_ok and self.regular_sequence_ok
                and self.intersection_ok)

    @property
    def conclusions_hold(self) -> bool:
        if not self.hypotheses_hold:
            return False
        return bool(self.rt_bound_ok) and bool(self.reg_equals_rn_ok)


def check_d_sequence_reduction(I: Ideal, j_gens,
                               cap: int = DEFAULT_CAP) -> DSequenceReductionReport:
    """Evaluate the d-sequence reduction theorem on I and the ordered
    generators of a candidate reduction J = (j_gens)."""
    ctx = I.ctx
    seq = [ctx.coerce(g) for g in j_gens]
    J = Ideal(ctx, seq)
    rn = reduction_number(I, J, cap)
    if not rn.resolved:
        raise PolyError(f"not a reduction within cap {cap}")
    r = rn.value
    s = len(seq)

    hyp_d = d_sequence_check(seq, ctx)

    hyp_reg = True
    for i in range(s - 1):
        step_ctx = ctx.with_quotient(seq[:i]) if i else ctx
        if not is_regular_element(seq[i], step_ctx):
            hyp_reg = False
            break

    failures = []
    for i in range(1, s):
        if not vv_check(seq[:i], I, r):
            failures.append(i)
    hyp_iii = not failures

    report = DSequenceReductionReport(
        rn=rn, d_sequence_ok=hyp_d, regular_sequence_ok=hyp_reg,
        intersection_ok=hyp_iii, intersection_failures=failures)
    if report.hypotheses_hold:
        report.rt = relation_type(I)
        report.rt_bound_ok = report.rt <= r + 1
        report.reg = reg_rees(I, J, cap)
        report.reg_equals_rn_ok = report.reg.resolved and report.reg.value == r
    return report
