import decimal
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pcfalg.exactnum import (
    EmbeddingError,
    QuadElem,
    TowerElem,
    TowerMismatch,
    abs_cmp,
    abs_cmp_one,
    adjoin_sqrt,
    div,
    is_integral,
    is_unit,
    rat,
    render,
    sign,
    sqrt_in_field,
    squarefree_decompose,
)
from pcfalg.interval import ComplexBox, Interval, complex_eval, decimal_str, real_eval

R2 = QuadElem(0, 1, 2)


def _dec_sqrt(x, digits=80):
    with decimal.localcontext() as ctx:
        ctx.prec = digits
        return decimal.Decimal(x).sqrt()


# ---------------------------------------------------------------------------
# arithmetic examples


def test_unit_norm():
    assert (1 + R2) * (1 - R2) == -1


def test_p5_norm_against_integer_oracle():
    oracle = 442 * 442 - 2 * 312 * 312
    assert oracle == 195364 - 194688 == 676
    assert QuadElem(442, 312, 2) * QuadElem(442, -312, 2) == oracle


def test_rational_sum():
    assert rat(Fraction(1, 2)) + rat(Fraction(1, 3)) == Fraction(5, 6)
    assert div(1, 2) + div(1, 3) == Fraction(5, 6)


def test_integral_fractions_collapse_to_int():
    assert type(rat(Fraction(6, 3))) is int
    assert type(div(6, 3)) is int
    assert QuadElem(Fraction(4, 2), 0, 2).a == 2


def test_mixed_radicands_rejected():
    with pytest.raises(TowerMismatch):
        R2 + QuadElem(0, 1, 3)
    assert QuadElem(5, 0, 3) + R2 == 5 + R2


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        div(R2, 0)
    with pytest.raises(ZeroDivisionError):
        div(3, 0)
    with pytest.raises(ZeroDivisionError):
        QuadElem(0, 0, 2).inverse()


def test_squarefree_decompose():
    assert squarefree_decompose(12) == (2, 3)
    assert squarefree_decompose(-50) == (5, -2)
    assert squarefree_decompose(1) == (1, 1)
    big = 10007**2 * 3
    assert squarefree_decompose(big) == (10007, 3)
    with pytest.raises(ValueError):
        QuadElem.checked(1, 1, 8)


# ---------------------------------------------------------------------------
# signs and magnitudes


def test_sign_examples():
    assert sign(1 - R2) == -1
    assert sign(0) == 0
    assert sign(QuadElem(0, 0, 2)) == 0


def test_sign_of_p5_entry_matches_integer_oracle():
    # -298532 + 211094*sqrt(2) has the sign of 211094^2*2 - 298532^2
    lhs, rhs = 211094**2 * 2, 298532**2
    expected = (lhs > rhs) - (lhs < rhs)
    assert expected == -1
    assert sign(QuadElem(-298532, 211094, 2)) == expected


def test_abs_cmp_one_examples():
    assert abs_cmp_one(QuadElem(7, 5, 2)) == 1
    assert abs_cmp_one(1 - R2) == -1
    assert abs_cmp_one(QuadElem(0, 1, -1)) == 0
    assert abs_cmp_one(Fraction(-1, 2)) == -1
    assert abs_cmp_one(-1) == 0


def test_abs_cmp():
    assert abs_cmp(1 + R2, 1 - R2) == 1
    assert abs_cmp(QuadElem(1, 1, -1), QuadElem(1, -1, -1)) == 0
    assert abs_cmp(2, QuadElem(0, 2, -1)) == 0


def test_sign_needs_real_embedding():
    with pytest.raises(EmbeddingError):
        sign(QuadElem(0, 1, -1))


# ---------------------------------------------------------------------------
# square roots and towers


def test_sqrt_in_field():
    assert sqrt_in_field(Fraction(9, 4)) == Fraction(3, 2)
    assert sqrt_in_field(3 + 2 * R2) == 1 + R2
    assert sqrt_in_field(2) is None


def test_adjoin_sqrt_rational():
    s = adjoin_sqrt(12)
    assert s == 2 * QuadElem(0, 1, 3)
    assert s * s == 12


def test_tower_beta():
    beta = adjoin_sqrt(2 + R2)
    assert isinstance(beta, TowerElem)
    assert beta * beta == 2 + R2
    assert render(beta) == "sqrt(2+sqrt(2))"
    assert sign(beta) == 1


def test_tower_radicands_differing_by_square_agree():
    beta = adjoin_sqrt(2 + R2)
    other = adjoin_sqrt(8 + 4 * R2)
    assert other == 2 * beta
    assert other - beta == beta


def test_tower_arithmetic_inverse():
    beta = adjoin_sqrt(2 + R2)
    x = 3 - R2 * beta
    assert x * x.inverse() == 1
    assert div(x, x) == 1


# ---------------------------------------------------------------------------
# rendering and integrality


@pytest.mark.parametrize(
    "value, text",
    [
        (QuadElem(3, 5, 2), "3+5*sqrt(2)"),
        (QuadElem(Fraction(1, 2), Fraction(-3, 4), -1), "1/2-3/4*sqrt(-1)"),
        (QuadElem(0, -1, 2), "-sqrt(2)"),
        (Fraction(7, 5), "7/5"),
        (-12, "-12"),
    ],
)
def test_render(value, text):
    assert render(value) == text


def test_integrality():
    assert is_integral(QuadElem(Fraction(1, 2), Fraction(1, 2), -7))
    assert not is_integral(QuadElem(Fraction(1, 2), Fraction(1, 2), -1))
    assert not is_integral(Fraction(1, 2))
    assert is_unit(1 + R2)
    assert not is_unit(QuadElem(1, 1, -1))


# ---------------------------------------------------------------------------
# properties

small = st.fractions(min_value=-5, max_value=5, max_denominator=4)
quads = st.builds(lambda a, b: QuadElem(a, b, 2), small, small)
gauss = st.builds(lambda a, b: QuadElem(a, b, -1), small, small)


@settings(max_examples=100, deadline=None)
@given(quads, quads, quads)
def test_field_axioms_real(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    if x != 0:
        assert x * x.inverse() == 1


@settings(max_examples=100, deadline=None)
@given(gauss, gauss, gauss)
def test_field_axioms_imaginary(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    if x != 0:
        assert div(x * y, x) == y


@settings(max_examples=120, deadline=None)
@given(quads)
def test_sign_properties(x):
    if x != 0:
        assert sign(x) * sign(-x) == -1
        assert sign(x * x) == 1


@settings(max_examples=120, deadline=None)
@given(quads)
def test_sign_agrees_with_enclosure(x):
    iv = real_eval(x, 64)
    s = iv.sign()
    if s is not None:
        assert s == sign(x)


def _dec(q):
    q = Fraction(q)
    return decimal.Decimal(int(q.numerator)) / int(q.denominator)


@settings(max_examples=60, deadline=None)
@given(st.one_of(quads, gauss), st.sampled_from([32, 64, 128]))
def test_enclosure_contains_and_shrinks(x, bits):
    narrow, wide = complex_eval(x, 2 * bits), complex_eval(x, bits)
    assert narrow.radius() <= wide.radius() / 2 or narrow.radius() == 0
    if x.b == 0:
        for box in (narrow, wide):
            assert box.re.contains(Fraction(x.a)) and box.im.contains(0)
        return
    with decimal.localcontext() as ctx:
        ctx.prec = 200
        part = _dec(x.b) * _dec_sqrt(abs(x.d), 200)
        re, im = (_dec(x.a) + part, 0) if x.d > 0 else (_dec(x.a), part)
    for box in (narrow, wide):
        assert box.re.contains(Fraction(re)) and box.im.contains(Fraction(im))


# ---------------------------------------------------------------------------
# interval layer


def test_complex_eval_one_plus_sqrt2():
    oracle = 1 + _dec_sqrt(2)
    box = complex_eval(1 + R2, 64)
    assert box.re.lo_q <= Fraction(oracle) <= box.re.hi_q
    assert box.im.contains(0)
    assert decimal_str(1 + R2, 20) == "2.4142135623730950488"


def test_complex_eval_exact_point():
    box = complex_eval(Fraction(3, 4), 64)
    assert box.re.lo_q == box.re.hi_q == Fraction(3, 4)


def test_complex_eval_tower():
    oracle = _dec_sqrt(2 + _dec_sqrt(2))
    box = complex_eval(adjoin_sqrt(2 + R2), 64)
    assert box.re.lo_q <= Fraction(oracle) <= box.re.hi_q
    assert str(oracle).startswith("1.84775906")
    assert decimal_str(adjoin_sqrt(2 + R2), 12) == "1.84775906502"


def test_complex_eval_imaginary():
    box = complex_eval(QuadElem(1, 1, -1), 64)
    assert box.re.contains(1) and box.im.contains(1)


def test_interval_sqrt_and_division():
    two = Interval.point(2, 80)
    r = two.sqrt()
    assert (r * r).contains(2)
    with pytest.raises(ZeroDivisionError):
        Interval(Interval.point(-1, 20).lo, Interval.point(1, 20).hi, 20).inverse()


def test_complex_sqrt_branch():
    z = ComplexBox.point(-4, 64)
    s = z.sqrt()
    assert s.re.contains(0) and s.im.contains(2)
