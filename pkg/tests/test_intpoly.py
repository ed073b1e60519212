from cyclorank.intpoly import NEG_INF, IntPoly


def test_trailing_zeros_stripped():
    assert IntPoly((1, 2, 0, 0)).coeffs == (1, 2)
    assert IntPoly((0, 0)).coeffs == ()


def test_zero_degree_is_marker_not_number():
    z = IntPoly(())
    assert z.degree is NEG_INF
    assert z.is_zero
    assert NEG_INF < 0
    assert NEG_INF < -(10**100)
    assert not (NEG_INF < NEG_INF)
    assert 0 > NEG_INF
    assert NEG_INF != 0


def test_arithmetic_exact():
    f = IntPoly((1, 3, 4, 2))
    g = IntPoly((-2, 1))
    assert (f * g).coeffs == (-2, -5, -5, 0, 2)
    assert (f + (-f)).is_zero
    assert (3 * f).coeffs == (3, 9, 12, 6)
    assert (f - f).is_zero


def test_monomial_and_eval():
    x9 = IntPoly.monomial(9)
    assert x9.degree == 9 and x9(2) == 512
    f = IntPoly((1, 3, 4, 2))
    # Horner at a few points, big and small
    assert f(1) == 10
    assert f(-1) == 1 - 3 + 4 - 2
    assert f(10**6) == 1 + 3 * 10**6 + 4 * 10**12 + 2 * 10**18
