import varjet


F = varjet.Functional("int qd*q*q_xx dx")
G = varjet.Functional("int qd_x*exp(q_x) dx")
H = varjet.Functional("int qd_xx*cos(q) dx")


def test_parse_and_render_round_trip():
    f = varjet.Functional(str(F))
    assert f == F
    assert f.base == "x"
    assert f.grading == 1


def test_expression_arithmetic_is_exact():
    a = varjet.Expression("1/3*q")
    b = varjet.Expression("2/3*q")
    assert str(a + b) == "q"
    assert (a - a).is_zero


def test_schouten_bracket_matches_reference():
    fg = varjet.schouten_old(F, G)
    ref = varjet.Functional(
        "int q_xx*exp(q_x)*(qd_x*q*q_xx - 2*qd_x*q_x - 2*qd*q_xx) dx"
    )
    diff = fg.density - ref.density
    assert varjet.is_exact(diff, "x").is_trivial


def test_laplacian_and_euler():
    lap = varjet.bv_laplacian(F)
    assert varjet.is_exact(lap.density, "x").is_trivial
    e = varjet.euler(varjet.Expression("q_x^2"), odd=False)
    assert str(e) == "-2*q_xx"


def test_total_derivative_and_primitive():
    d = varjet.total_derivative(varjet.Expression("q*q_x"), "x")
    p = varjet.find_primitive(d, "x")
    assert varjet.total_derivative(p, "x") == d


def test_jacobiator_is_nonzero_cocycle():
    rep = varjet.jacobiator(F, G, H)
    assert not rep.density.is_zero
    assert varjet.is_exact(rep.density, "x").is_trivial


def test_geometric_jacobi_is_empty():
    rep = varjet.jacobiator_geometric(F, G, H)
    assert rep.lhs_raw_terms == 8
    assert rep.rhs_merged_terms == 14
    assert rep.empty


def test_terminal_evaluation_matches_bracket():
    comp = varjet.geometric_bracket(varjet.lift(G), varjet.lift(H))
    value = varjet.evaluate_terminal(comp, "x")
    assert varjet.schouten_old(G, H).density == value


def test_structured_output_is_json():
    import json

    doc = json.loads(F.density.structured())
    assert doc["schema"] == "varjet/expression@1"


def test_parse_error_reports_position():
    import pytest

    with pytest.raises(ValueError):
        varjet.Expression("q +* q")
