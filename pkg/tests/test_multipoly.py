"""Sparse multivariate arithmetic and the elimination engine."""

from fractions import Fraction

import pytest

from fullerene_belyi.multipoly import (InconsistentSystemError, MultiPoly,
                                       NonDivisibleError, NonLinearStepError,
                                       ParamPoly, divide_out_assumed_nonzero,
                                       sequential_linear_solve)

AB = ("a1", "a0", "b1", "b0")


def v(name, variables=AB):
    return MultiPoly.var(variables, name)


def c(value, variables=AB):
    return MultiPoly.const(variables, value)


# ---------------------------------------------------------------------------
# arithmetic
# ---------------------------------------------------------------------------


def test_product_of_conjugates():
    a1, b1 = v("a1"), v("b1")
    assert (a1 - b1) * (a1 + b1) == a1 * a1 - b1 * b1


def test_substitute_annihilates():
    a1, b1 = v("a1"), v("b1")
    eq = a1.scale(2) - b1.scale(5)
    assert eq.substitute("b1", a1.scale(Fraction(2, 5))).is_zero


def test_substitute_constant():
    names = ("a6", "a1")
    a6 = MultiPoly.var(names, "a6")
    expr = (a6 * a6).scale(Fraction(-1, 121))
    assert expr.substitute("a6", 11) == MultiPoly.const(names, -1)
    assert expr.evaluate({"a6": 11}) == Fraction(-1)


def test_variable_set_mismatch():
    with pytest.raises(ValueError):
        v("a1") + MultiPoly.var(("x", "y"), "x")


def test_substitution_is_ring_homomorphism(rng):
    names = ("x", "y", "w")

    def rand_mp():
        out = MultiPoly.zero(names)
        for _ in range(rng.randint(1, 4)):
            expo = tuple(rng.randint(0, 2) for _ in names)
            out = out + MultiPoly(names, {expo: Fraction(rng.randint(-5, 5))})
        return out

    for _ in range(150):
        p, q, r = rand_mp(), rand_mp(), rand_mp()
        lhs = (p * q).substitute("y", r)
        rhs = p.substitute("y", r) * q.substitute("y", r)
        assert lhs == rhs
        assert (p + q).substitute("y", r) == p.substitute("y", r) + q.substitute("y", r)


def test_divide_exact_and_failure():
    a1, b1 = v("a1"), v("b1")
    prod = (a1 - b1) * (a1 + b1)
    assert prod.divide_exact(a1 - b1) == a1 + b1
    with pytest.raises(NonDivisibleError):
        (a1 * a1 + c(1)).divide_exact(a1 - b1)


# ---------------------------------------------------------------------------
# divide_out_assumed_nonzero
# ---------------------------------------------------------------------------


def test_divide_out_degree_three_coefficient():
    a1, a0, b1, b0 = v("a1"), v("a0"), v("b1"), v("b0")
    inner = (a1 * a1 - a1 * b1 * 5 + b1 * b1 * 4 + a0 * 6 - b0 * 6)
    eq = (a1 - b1) * inner
    assert divide_out_assumed_nonzero(eq, a1 - b1) == inner


def test_divide_out_fifth_power():
    a1, b1 = v("a1"), v("b1")
    eq = ((a1 - b1) ** 5 * (a1 * 2 - b1 * 5)).scale(Fraction(-1, 27))
    out = divide_out_assumed_nonzero(eq, (a1 - b1) ** 5)
    assert out == (a1 * 2 - b1 * 5).scale(Fraction(-1, 27))


def test_divide_out_nondivisible_is_error():
    a1, b1 = v("a1"), v("b1")
    with pytest.raises(NonDivisibleError):
        divide_out_assumed_nonzero(a1 * 2 - b1 * 5, a1 - b1)


# ---------------------------------------------------------------------------
# ParamPoly
# ---------------------------------------------------------------------------


def test_parampoly_derivative():
    names = ("a1", "a0")
    p = ParamPoly.from_terms(names, {
        2: MultiPoly.const(names, 1),
        1: MultiPoly.var(names, "a1"),
        0: MultiPoly.var(names, "a0")})
    d = p.derivative()
    assert d.degree == 1
    assert d.coefficient(1) == MultiPoly.const(names, 2)
    assert d.coefficient(0) == MultiPoly.var(names, "a1")


def symbolic_monic(m):
    """z^m + a_{m-1} z^{m-1} + ... + a_0, every coefficient symbolic."""
    names = tuple(f"a{i}" for i in range(m - 1, -1, -1))
    terms = {m: MultiPoly.const(names, 1)}
    for i in range(m):
        terms[i] = MultiPoly.var(names, f"a{i}")
    return ParamPoly.from_terms(names, terms)


@pytest.mark.parametrize("m", [7, 9, 11, 12, 13])
def test_ode_residual_top_coefficient_is_constant(m):
    # 22 P P'''' + 45 P''^2 - 66 P' P''' has z^(2m-4) coefficient
    # m(m-1)(m-11)(m-12) for any monic symbolic P
    p = symbolic_monic(m)
    d1 = p.derivative()
    d2 = d1.derivative()
    d3 = d2.derivative()
    d4 = d3.derivative()
    residual = (p * d4) * 22 + (d2 * d2) * 45 - (d1 * d3) * 66
    top = residual.coefficient(2 * m - 4)
    expected = m * (m - 1) * (m - 11) * (m - 12)
    if expected:
        assert top.is_constant and top.constant_value() == expected
    else:
        assert top.is_zero


def test_quotient_ansatz_z5_coefficient_dies_with_c_elimination():
    # the degree-6 ansatz S = A^3 - B^2 C - k z: substituting the solved
    # c1 kills the z^5 coefficient identically
    names = ("c1", "c0", "b1", "b0", "a1", "a0", "k")

    def quad(hi, lo):
        return ParamPoly.from_terms(names, {
            2: MultiPoly.const(names, 1),
            1: MultiPoly.var(names, hi),
            0: MultiPoly.var(names, lo)})

    S = (quad("a1", "a0") ** 3 - quad("b1", "b0") ** 2 * quad("c1", "c0")
         - ParamPoly.from_terms(names, {1: MultiPoly.var(names, "k")}))
    c1_solution = MultiPoly.var(names, "a1") * 3 - MultiPoly.var(names, "b1") * 2
    assert S.coefficient(6).is_zero
    assert not S.coefficient(5).is_zero
    assert S.coefficient(5).substitute("c1", c1_solution).is_zero


def test_parampoly_evaluate_coeffs():
    names = ("a1", "a0")
    p = ParamPoly.from_terms(names, {
        2: MultiPoly.const(names, 1),
        1: MultiPoly.var(names, "a1"),
        0: MultiPoly.var(names, "a0")})
    concrete = p.evaluate_coeffs({"a1": 10, "a0": 5})
    assert [str(c) for c in concrete.coeffs] == ["5", "10", "1"]


# ---------------------------------------------------------------------------
# sequential_linear_solve on synthetic systems
# ---------------------------------------------------------------------------


def test_solve_small_triangular_system():
    names = ("y", "x")
    x, y = MultiPoly.var(names, "x"), MultiPoly.var(names, "y")
    one = MultiPoly.const(names, 1)
    # y - x^2 = 0 ; x - 3 = 0
    trace = sequential_linear_solve(
        [(2, y - x * x), (1, x - one.scale(3))], names)
    assert trace.free_vars == ()
    values = trace.evaluate({})
    assert values == {"x": Fraction(3), "y": Fraction(9)}


def test_solve_records_assumption_division():
    names = ("u", "t")
    t, u = MultiPoly.var(names, "t"), MultiPoly.var(names, "u")
    eq = (t - u) * (u - MultiPoly.const(names, 4))
    trace = sequential_linear_solve([(0, eq)], names, assumptions=[t - u])
    step = trace.steps[0]
    assert step.variable == "u"
    assert step.divided_by == ((t - u, 1),)
    assert step.substitution == MultiPoly.const(names, 4)


def test_solve_inconsistent_system():
    names = ("x",)
    x = MultiPoly.var(names, "x")
    one = MultiPoly.const(names, 1)
    with pytest.raises(InconsistentSystemError):
        sequential_linear_solve([(1, x - one), (0, x - one.scale(2))], names)


def test_solve_nonlinear_step_carries_trace():
    names = ("y", "x")
    x, y = MultiPoly.var(names, "x"), MultiPoly.var(names, "y")
    with pytest.raises(NonLinearStepError) as err:
        sequential_linear_solve(
            [(1, y - x * x), (0, x * x * x - y * y)], names)
    assert err.value.trace.steps[0].variable == "y"
    assert err.value.stuck_labels == [0]


def test_trace_replay_annihilates_synthetic_system(rng):
    names = ("w", "y", "x")
    x = MultiPoly.var(names, "x")
    y = MultiPoly.var(names, "y")
    w = MultiPoly.var(names, "w")
    system = [
        (3, w - (x * y + x * x)),
        (2, y - x.scale(7)),
        (1, x - MultiPoly.const(names, 2)),
    ]
    trace = sequential_linear_solve(system, names)
    for _, eq in system:
        assert trace.apply(eq).is_zero


def test_trace_report_shape():
    names = ("y", "x")
    x, y = MultiPoly.var(names, "x"), MultiPoly.var(names, "y")
    trace = sequential_linear_solve(
        [(1, y - x), (0, x - MultiPoly.const(names, 5))], names)
    doc = trace.to_report()
    assert doc["free_variables"] == []
    assert doc["steps"][0]["variable"] == "y"
    assert doc["steps"][1]["substitution"] == "5"
