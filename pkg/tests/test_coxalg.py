import pytest
from hypothesis import given, settings, strategies as st

from classical_schubert import coxalg, expressions as ex, poly, weyl
from classical_schubert.coxalg import AlgebraElement, AlgebraKind, h
from classical_schubert.poly import BETA, Frac, var
from classical_schubert.weyl import GroupType

x, y = Frac(var("x", 1)), Frac(var("y", 1))
A3, B2, B3, D3 = GroupType("A", 3), GroupType("B", 2), GroupType("B", 3), GroupType("D", 3)
KINDS = [AlgebraKind(m, g) for m in ("nil", "id") for g in (A3, B2, D3)]


def u(kind, *word):
    return AlgebraElement.word(kind, word)


def test_generator_squares():
    for g in (A3, B2):
        assert u(coxalg.nil(g), 1, 1).is_zero()
        assert u(coxalg.idc(g), 1, 1) == u(coxalg.idc(g), 1).scale(BETA)
    assert u(coxalg.idc(B2, 2), 0, 0) == u(coxalg.idc(B2, 2), 0).scale(2 * BETA)


@pytest.mark.parametrize("kind", KINDS, ids=str)
def test_braid_relations(kind):
    g = kind.group
    gens = g.generators
    for i in gens:
        for j in gens:
            if i >= j:
                continue
            s = weyl.generator(g, i) * weyl.generator(g, j)
            m = 1
            while s != weyl.identity(g):
                s, m = s * weyl.generator(g, i) * weyl.generator(g, j), m + 1
            left = [i, j] * m
            right = [j, i] * m
            assert u(kind, *left[:m]) == u(kind, *right[:m])


def test_h_factor_examples():
    nil, idk = coxalg.nil(A3), coxalg.idc(A3)
    assert coxalg.h_mul(AlgebraElement.one(nil), h(1, x)) == AlgebraElement.one(nil) + u(nil, 1).scale(x)
    assert coxalg.product_of_factors([h(1, x), h(1, y)], nil) == coxalg.product_of_factors([h(1, x + y)], nil)
    assert coxalg.product_of_factors([h(1, x), h(1, y)], idk) == coxalg.product_of_factors([h(1, poly.beta_add(x, y))], idk)
    assert coxalg.product_of_factors([], nil).is_one()


def test_transfer_b2_expansion():
    # h_1 h_0 h_1 folded by hand: 1 + x(2u_1 + u_0) + x^2(u_10 + u_01) + x^3 u_101
    kind = coxalg.nil(B2)
    e = coxalg.product_of_factors([h(1, x), h(0, x), h(1, x)], kind)
    expected = (
        AlgebraElement.one(kind)
        + u(kind, 1).scale(2 * x)
        + u(kind, 0).scale(x)
        + (u(kind, 1, 0) + u(kind, 0, 1)).scale(x * x)
        + u(kind, 1, 0, 1).scale(x * x * x)
    )
    assert e == expected
    assert len(e.support()) == 6


def test_a1_three_expansion():
    kind = coxalg.nil(A3)
    e = coxalg.product_of_factors([h(2, x), h(1, x)], kind)
    assert e == AlgebraElement.one(kind) + u(kind, 2).scale(x) + u(kind, 1).scale(x) + u(kind, 2, 1).scale(x * x)


def test_inversion_examples():
    nil, idk = coxalg.nil(B2), coxalg.idc(B2)
    assert coxalg.invert_factored([h(1, x)], nil) == coxalg.product_of_factors([h(1, -x)], nil)
    phi = poly.phi
    assert coxalg.invert_factored([h(1, phi(x))], idk) == coxalg.product_of_factors([h(1, phi(-x))], idk)
    kind = coxalg.nil(A3)
    fs = ex.schubert_a_factors(ex.xs(3), 3)
    assert (coxalg.invert_factored(fs, kind) * coxalg.product_of_factors(fs, kind)).is_one()


def test_sqrt_examples():
    nil = coxalg.nil(B2)
    assert coxalg.sqrt(AlgebraElement.one(nil)).is_one()
    b = ex.transfer("B", x, B2)
    assert coxalg.sqrt(b * b) == b
    cal = ex.transfer("calB", x, B2)
    assert coxalg.sqrt(cal * cal) == cal


def test_sqrt_obstruction_certificate():
    # u_0 -> b, u_1 -> 0 sends calB(x) to 1 + b phi(x), which is not a square
    kind = coxalg.idc(B2)
    cal = ex.transfer("calB", x, B2)
    value = coxalg.character(cal, (0,))
    assert value == 1 + BETA * poly.phi(x)
    assert coxalg.character_obstruction(cal * cal) is None
    assert coxalg.character_obstruction(cal) == (0, value)
    with pytest.raises(coxalg.SqrtError, match="character"):
        coxalg.sqrt(cal)
    with pytest.raises(coxalg.SqrtError):
        coxalg.sqrt(AlgebraElement.zero(kind))


def test_character_is_multiplicative():
    kind = coxalg.idc(B2)
    a, b = ex.transfer("calB", x, B2), ex.transfer("B", y, B2, "id")
    for subset in ((0,), (1,), (0, 1)):
        assert coxalg.character(a * b, subset) == coxalg.character(a, subset) * coxalg.character(b, subset)
    assert coxalg.character(AlgebraElement.one(kind), (0,)) == 1


def test_coefficient_examples():
    kind = coxalg.nil(A3)
    assert AlgebraElement.one(kind).coefficient(weyl.identity(A3)) == 1
    s = ex.build(ex.ExpressionSpec(A3))
    assert s.coefficient(weyl.longest_element(A3)) == var("x", 1) ** 2 * var("x", 2)
    f = ex.stanley(B2, "nil", 4)
    zs = ex.zs(4)
    assert f[weyl.generator(B2, 0)] == sum(zs[1:], zs[0])


@st.composite
def elements(draw, kind):
    out = AlgebraElement.zero(kind)
    W = kind.W
    for _ in range(draw(st.integers(0, 4))):
        w = draw(st.sampled_from(W.elements))
        c = draw(st.integers(-2, 2)) * var("x", draw(st.integers(1, 3))) + draw(st.integers(-2, 2))
        out = out + AlgebraElement.basis(kind, w, c)
    return out


@st.composite
def kind_and_elements(draw, count):
    kind = draw(st.sampled_from(KINDS))
    return kind, [draw(elements(kind)) for _ in range(count)]


@settings(max_examples=50, deadline=None)
@given(kind_and_elements(3))
def test_product_associative_and_distributive(ke):
    _, (a, b, c) = ke
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=50, deadline=None)
@given(kind_and_elements(2))
def test_fast_product_matches_word_fold(ke):
    _, (a, b) = ke
    assert coxalg.mul(a, b) == coxalg.mul_fold(a, b)


@settings(max_examples=30, deadline=None)
@given(kind_and_elements(1))
def test_h_mul_matches_expanded_product(ke):
    kind, (a,) = ke
    for i in kind.group.generators:
        expanded = AlgebraElement.one(kind) + AlgebraElement.generator(kind, i).scale(x)
        assert coxalg.h_mul(a, h(i, x), "right") == a * expanded
        assert coxalg.h_mul(a, h(i, x), "left") == expanded * a


@settings(max_examples=20, deadline=None)
@given(kind_and_elements(1))
def test_sqrt_of_square(ke):
    kind, (a,) = ke
    one = AlgebraElement.one(kind)
    # unipotent elements 1 + (terms of positive length) with polynomial coefficients
    n = AlgebraElement(kind, {k: c for k, c in a.coeffs.items() if k != 0})
    s = one + n
    assert coxalg.sqrt(s * s) == s


def test_json_rows_and_format():
    kind = coxalg.nil(B2)
    e = coxalg.product_of_factors([h(0, x)], kind)
    assert coxalg.format_element(e) == "(1)*u[id] + (x1)*u[0]"
    rows = coxalg.to_json_rows(e)
    assert [r["word"] for r in rows] == ["", "0"]
    assert poly.from_json(rows[1]["coeff"]) == var("x", 1)


def test_mixed_kinds_rejected():
    with pytest.raises(coxalg.AlgebraError):
        AlgebraElement.one(coxalg.nil(B2)) * AlgebraElement.one(coxalg.idc(B2))
    with pytest.raises(weyl.WeylError):
        AlgebraElement.generator(coxalg.nil(A3), 0)
