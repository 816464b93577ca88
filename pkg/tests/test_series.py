import random
from fractions import Fraction

import pytest

from swtorsion.series import TruncSeries, geometric_inverse_square, series_det


def S(order, *coeffs):
    return TruncSeries(order, coeffs)


def random_series(rng, order, zero_constant=False):
    coeffs = [Fraction(rng.randint(-4, 4), rng.randint(1, 3))
              for _ in range(order + 1)]
    if zero_constant:
        coeffs[0] = Fraction(0)
    return TruncSeries(order, coeffs)


def test_mul_difference_of_squares():
    assert S(2, 1, 1) * S(2, 1, -1) == S(2, 1, 0, -1)


def test_mul_identity():
    a = S(3, 2, -1, 5, 7)
    assert a * TruncSeries.one(3) == a


def test_mul_hand_cauchy_product():
    # (1 - 3t + t^2) * sum (m+1) t^m at order 3, expanded by hand
    a = S(3, 1, -3, 1)
    b = S(3, 1, 2, 3, 4)
    assert a * b == S(3, 1, -1, -2, -3)


def test_mul_order_mismatch():
    with pytest.raises(ValueError):
        S(2, 1) * S(3, 1)


def test_exp_zero():
    assert TruncSeries.zero(4).exp() == TruncSeries.one(4)


def test_exp_taylor():
    e = TruncSeries.monomial(3, 1).exp()
    assert e == TruncSeries(3, [1, 1, Fraction(1, 2), Fraction(1, 6)])


def test_exp_log_of_inverse_square():
    # exp(sum 2 t^k / k) equals 1/(1-t)^2; oracle by brute-force squaring
    # of the geometric series.
    order = 4
    log = TruncSeries(order, [0] + [Fraction(2, k) for k in range(1, order + 1)])
    geom = TruncSeries(order, [1] * (order + 1))
    assert log.exp() == geom * geom
    assert log.exp() == S(order, 1, 2, 3, 4, 5)


def test_exp_rejects_constant_term():
    with pytest.raises(ValueError):
        TruncSeries.one(2).exp()


def test_div_geometric():
    one = TruncSeries.one(3)
    assert one / S(3, 1, -1) == S(3, 1, 1, 1, 1)


def test_div_self():
    a = S(3, 2, 5, -1, 3)
    assert a / a == TruncSeries.one(3)


def test_div_multiply_back():
    a = S(3, 1, -3, 1)
    denom = S(3, 1, -2, 1)
    q = a / denom
    assert q == S(3, 1, -1, -2, -3)
    assert q * denom == a


def test_div_by_zero_constant():
    with pytest.raises(ZeroDivisionError):
        TruncSeries.one(2) / TruncSeries.zero(2)


def test_ring_axioms_random():
    rng = random.Random(7)
    for _ in range(25):
        order = rng.randint(0, 8)
        a, b, c = (random_series(rng, order) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        assert a + b == b + a
        assert (a - b) + b == a


def test_div_inverts_mul():
    rng = random.Random(11)
    for _ in range(25):
        order = rng.randint(0, 8)
        a = random_series(rng, order)
        b = random_series(rng, order)
        if b[0] == 0:
            b = b + TruncSeries.one(order)
        if b[0] == 0:
            continue
        assert (a * b) / b == a


def test_exp_is_homomorphism():
    rng = random.Random(13)
    for _ in range(15):
        order = rng.randint(1, 8)
        a = random_series(rng, order, zero_constant=True)
        b = random_series(rng, order, zero_constant=True)
        assert (a + b).exp() == a.exp() * b.exp()


def test_shift_down():
    a = S(4, 0, 0, 3, 1, 2)
    assert a.shift_down(2) == S(2, 3, 1, 2)
    with pytest.raises(ValueError):
        S(2, 1, 0, 0).shift_down(1)


def test_geometric_inverse_square():
    g = geometric_inverse_square(5)
    assert g * (S(5, 1, -1) * S(5, 1, -1)) == TruncSeries.one(5)


def test_series_det_small():
    t = TruncSeries.monomial(3, 1)
    one = TruncSeries.one(3)
    # det [[1, t], [t, 1]] = 1 - t^2
    assert series_det([[one, t], [t, one]], 3) == S(3, 1, 0, -1)
    assert series_det([], 3) == one
