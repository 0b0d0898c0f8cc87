"""Reduction numbers, integral degrees, Artin-Rees numbers, d-sequences,
regularity, and the d-sequence reduction theorem checker."""

import pytest

from reeskit import (Fraction, Ideal, PolyError, RingCtx, artin_rees_number,
                     check_d_sequence_reduction, d_sequence_check,
                     find_principal_reduction, ideal_intersect, ideal_member,
                     ideal_power, ideal_product, integral_degree_fraction,
                     integral_degree_sup_estimate, is_reduction,
                     monomial_curve, reduction_number, reg_rees, vv_check)

CTX2 = RingCtx("x,y")
CUSP23 = monomial_curve((2, 3), ("u", "v"))
CUSP34 = monomial_curve((3, 4), ("u", "v"))


def I_(ctx, *gens):
    return Ideal(ctx, list(gens))


# -- reductions -----------------------------------------------------------------


def test_is_reduction_degenerate():
    x, y = CTX2.var("x"), CTX2.var("y")
    I = I_(CTX2, x, y)
    out = is_reduction(I, I, cap=4)
    assert out.resolved and out.value == 0


def test_is_reduction_huneke_slice():
    x, y = CTX2.var("x"), CTX2.var("y")
    I = I_(CTX2, x ** 2, x * y, y ** 2)
    J = I_(CTX2, x ** 2, y ** 2)
    out = is_reduction(J, I, cap=4)
    assert out.value == 1


def test_is_reduction_unresolved_and_containment_error():
    x, y = CTX2.var("x"), CTX2.var("y")
    I = I_(CTX2, x, y)
    out = is_reduction(I_(CTX2, x), I, cap=4)
    assert not out.resolved and out.cap == 4
    assert str(out) == "unresolved(cap=4)"
    with pytest.raises(PolyError, match="not contained"):
        is_reduction(I_(CTX2, x + 1), I_(CTX2, x), cap=2)


def test_reduction_number_huneke_n3():
    x, y = CTX2.var("x"), CTX2.var("y")
    I = I_(CTX2, x ** 3, y ** 3, x ** 2 * y)
    J = I_(CTX2, x ** 3, y ** 3)
    assert reduction_number(I, J, cap=6).value == 2


def test_reduction_number_on_curve():
    u, v = CUSP34.var("u"), CUSP34.var("v")
    assert reduction_number(I_(CUSP34, u, v), I_(CUSP34, u), cap=6).value == 2


def test_find_principal_reduction():
    u, v = CUSP34.var("u"), CUSP34.var("v")
    hit = find_principal_reduction(I_(CUSP34, u, v), cap=6)
    assert hit is not None
    g, out = hit
    assert g == u and out.value == 2
    x = CTX2.var("x")
    assert find_principal_reduction(I_(CTX2, x, CTX2.var("y")), cap=3,
                                    trials=4) is None
    hit = find_principal_reduction(I_(CTX2, x), cap=3)
    assert hit[0] == x and hit[1].value == 0


def test_principal_reduction_survey_agrees():
    u, v = CUSP23.var("u"), CUSP23.var("v")
    I = I_(CUSP23, u, 2 * u, v)
    g, out = find_principal_reduction(I, cap=4, trials=3, survey=True)
    assert out.value == 1
    # distinct generators u and 2u are both principal reductions; the survey
    # asserts their reduction numbers agree before returning the first
    assert g == u


# -- integral degree ---------------------------------------------------------------


def test_integral_degree_trivial_membership():
    x, y = CTX2.var("x"), CTX2.var("y")
    out = integral_degree_fraction(x * y, x, CTX2, cap=4)
    assert out.value == 1


def test_integral_degree_on_curves():
    u, v = CUSP34.var("u"), CUSP34.var("v")
    assert integral_degree_fraction(v, u, CUSP34, cap=8).value == 3
    sv = monomial_curve((3, 4, 5), ("a", "b", "c"))
    assert integral_degree_fraction(sv.var("b"), sv.var("a"), sv,
                                    cap=8).value == 3
    # not integral within the cap
    out = integral_degree_fraction(CTX2.var("y"), CTX2.var("x"), CTX2, cap=4)
    assert not out.resolved


def test_integral_degree_requires_regular_denominator():
    node = RingCtx("x,y,z", quotient=["x*z"])
    with pytest.raises(PolyError, match="regular"):
        integral_degree_fraction(node.var("y"), node.var("x"), node)


def test_sup_estimate_report():
    u, v = CUSP34.var("u"), CUSP34.var("v")
    fracs = [Fraction(CUSP34, v, u), Fraction(CUSP34, v ** 2, u ** 2),
             Fraction(CUSP34, u, CUSP34.one)]
    ideals = [I_(CUSP34, u, v)]
    rep = integral_degree_sup_estimate(CUSP34, fracs, ideals, cap=8)
    assert rep.max_id == 3
    assert rep.max_rn_plus_one == 3
    assert rep.tie_holds
    empty = integral_degree_sup_estimate(CUSP34, [], [], cap=4)
    assert empty.max_id is None and empty.max_rn_plus_one is None


def test_sup_estimate_on_polynomial_ring():
    ctx = RingCtx("x")
    x = ctx.var("x")
    fracs = [Fraction(ctx, x ** 2, x), Fraction(ctx, x, ctx.one)]
    rep = integral_degree_sup_estimate(ctx, fracs, [I_(ctx, x)], cap=4)
    assert rep.max_id == 1 and rep.tie_holds


# -- Artin-Rees -----------------------------------------------------------------


def test_artin_rees_eisenbud_hochster_slice():
    ctx = CTX2
    f = ctx.parse("x^3 - y^4")
    a = I_(ctx, f)
    I = I_(ctx, ctx.var("x"), ctx.var("y"))
    rep = artin_rees_number(a, I, I_(ctx, ctx.zero), cap=8)
    assert rep.exact and rep.rt_bound == 3
    assert rep.s_value.value == 3
    lhs = ideal_intersect(ideal_power(I, 3), a)
    rhs = ideal_product(I, ideal_intersect(ideal_power(I, 2), a))
    assert not all(ideal_member(g, rhs) for g in lhs.basis_gens)


def test_artin_rees_wang_slice():
    ctx = RingCtx("x,y,z")
    x, y, z = (ctx.var(v) for v in "xyz")
    I = I_(ctx, x ** 2, y ** 2, x * y + z ** 2)
    rep = artin_rees_number(I_(ctx, z), I, I_(ctx, x, y, z), cap=8)
    assert rep.exact and rep.s_value.value == 2


def test_artin_rees_of_ideal_with_itself():
    x, y = CTX2.var("x"), CTX2.var("y")
    I = I_(CTX2, x, y)
    rep = artin_rees_number(I, I, I_(CTX2, CTX2.zero), cap=6)
    assert rep.s_value.value == 1


# -- d-sequences and Valabrega-Valla ----------------------------------------------


def test_d_sequence_examples():
    assert d_sequence_check([CTX2.var("x")], CTX2)
    assert d_sequence_check([CTX2.var("x"), CTX2.var("y")], CTX2)
    node = RingCtx("x,y,z", quotient=["x*z"])
    assert not d_sequence_check([node.var("x"), node.var("y")], node)
    assert d_sequence_check([node.var("y"), node.var("x")], node)
    assert d_sequence_check([node.var("x")], node)


def test_d_sequence_rejects_dependent_members():
    x = CTX2.var("x")
    assert not d_sequence_check([x, x ** 2], CTX2)


def test_vv_check_examples():
    x, y = CTX2.var("x"), CTX2.var("y")
    M = I_(CTX2, x, y)
    assert vv_check([x], M, 2)
    assert vv_check([], M, 5)
    I3 = I_(CTX2, x ** 3, y ** 3, x ** 2 * y)
    # the obstruction witness x^4*y^5 lies in (x^3) ∩ I3^3 but not x^3*I3^2
    assert not vv_check([x ** 3], I3, 2)
    I2 = I_(CTX2, x ** 2, y ** 2, x * y)
    assert vv_check([x ** 2], I2, 1)


# -- regularity --------------------------------------------------------------------


def test_reg_rees_exact_principal_cases():
    u, v = CUSP34.var("u"), CUSP34.var("v")
    out = reg_rees(I_(CUSP34, u, v), I_(CUSP34, u), cap=6)
    assert out.value == 2 and "exact" in out.witness
    x = CTX2.var("x")
    out = reg_rees(I_(CTX2, x), I_(CTX2, x), cap=4)
    assert out.value == 0


def test_reg_rees_t2_t3_curve():
    ctx = CUSP23
    u, v = ctx.var("u"), ctx.var("v")
    assert reduction_number(I_(ctx, u, v), I_(ctx, u), cap=4).value == 1
    out = reg_rees(I_(ctx, u, v), I_(ctx, u), cap=4)
    assert out.value == 1


def test_reg_rees_requires_a_reduction():
    x, y = CTX2.var("x"), CTX2.var("y")
    with pytest.raises(PolyError, match="not a reduction"):
        reg_rees(I_(CTX2, x, y), I_(CTX2, x), cap=3)


def test_reg_rees_window_mode_for_two_generators():
    x, y = CTX2.var("x"), CTX2.var("y")
    M = I_(CTX2, x, y)
    out = reg_rees(M, M, cap=4)
    assert out.value == 0 and "window" in out.witness


# -- the d-sequence reduction theorem -----------------------------------------------


def test_theorem_checker_on_principal_curve_reduction():
    u, v = CUSP34.var("u"), CUSP34.var("v")
    rep = check_d_sequence_reduction(I_(CUSP34, u, v), [u], cap=6)
    assert rep.hypotheses_hold
    assert rep.rn.value == 2
    assert rep.rt == 3 and rep.rt_bound_ok
    assert rep.reg.value == 2 and rep.reg_equals_rn_ok


def test_theorem_checker_reports_huneke_iii_failure():
    x, y = CTX2.var("x"), CTX2.var("y")
    I = I_(CTX2, x ** 3, y ** 3, x ** 2 * y)
    rep = check_d_sequence_reduction(I, [x ** 3, y ** 3], cap=6)
    assert rep.d_sequence_ok and rep.regular_sequence_ok
    assert not rep.intersection_ok
    assert rep.intersection_failures == [1]
    assert rep.rt is None  # no conclusion asserted when a hypothesis fails


def test_theorem_checker_on_regular_sequence():
    x, y = CTX2.var("x"), CTX2.var("y")
    M = I_(CTX2, x, y)
    rep = check_d_sequence_reduction(M, [x, y], cap=4)
    assert rep.hypotheses_hold
    assert rep.rn.value == 0
    assert rep.rt == 1 and rep.rt_bound_ok
    assert rep.reg_equals_rn_ok
