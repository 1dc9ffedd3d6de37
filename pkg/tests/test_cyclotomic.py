from hypothesis import given, settings
from hypothesis import strategies as st

from tlcell.cyclotomic import CycInt, cyclotomic_polynomial


def test_small_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(5) == (1, 1, 1, 1, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


def test_zeta_has_exact_order():
    for order in (1, 2, 3, 4, 5, 6):
        one = CycInt.one(order)
        acc = one
        for k in range(1, order + 1):
            acc = acc * CycInt.zeta_power(order, 1)
            if k < order and order > 1:
                assert acc != one
        assert acc == one


def test_all_roots_sum_to_zero():
    for order in (2, 3, 4, 5, 6):
        total = CycInt.zero(order)
        for k in range(order):
            total = total + CycInt.zeta_power(order, k)
        assert not total


def test_minus_one_at_even_orders():
    assert CycInt.zeta_power(2, 1) == CycInt.from_int(-1, 2)
    assert CycInt.zeta_power(4, 2) == CycInt.from_int(-1, 4)
    assert CycInt.zeta_power(6, 3) == CycInt.from_int(-1, 6)


coeff_vectors = st.lists(st.integers(-9, 9), min_size=1, max_size=4)


@settings(max_examples=80, deadline=None)
@given(st.sampled_from([1, 2, 3, 4, 5, 6]), coeff_vectors, coeff_vectors, coeff_vectors)
def test_ring_axioms(order, xs, ys, zs):
    def lift(coeffs):
        acc = CycInt.zero(order)
        for k, c in enumerate(coeffs):
            acc = acc + CycInt.from_int(c, order) * CycInt.zeta_power(order, k)
        return acc

    x, y, z = lift(xs), lift(ys), lift(zs)
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + CycInt.zero(order) == x
    assert x * CycInt.one(order) == x
    assert x - x == CycInt.zero(order)
