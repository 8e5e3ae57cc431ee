from fractions import Fraction

import pytest

from zetakernel.euler import (
    bernoulli,
    check_identities,
    euler_number,
    euler_poly,
    special_values,
)
from zetakernel.polynomials import Poly

F = Fraction


def test_low_degree_euler_polynomials():
    assert euler_poly(0) == Poly([1])
    assert euler_poly(1) == Poly([F(-1, 2), 1])
    assert euler_poly(2) == Poly([0, -1, 1])
    assert euler_poly(3) == Poly([F(1, 4), 0, F(-3, 2), 1])
    assert euler_poly(4) == Poly([0, 1, 0, -2, 1])


@pytest.mark.parametrize(
    "n, x, value",
    [
        (3, 0, F(1, 4)),
        (5, 0, F(-1, 2)),
        (2, F(1, 2), F(-1, 4)),
        (4, F(1, 2), F(5, 16)),
        (6, F(1, 2), F(-61, 64)),
        (2, 0, 0),
        (2, 1, 0),
        (4, 1, 0),
    ],
)
def test_euler_poly_special_points(n, x, value):
    assert euler_poly(n)(x) == value


@pytest.mark.parametrize(
    "n, value",
    [(0, 1), (2, -1), (4, 5), (6, -61), (8, 1385), (10, -50521)],
)
def test_euler_numbers(n, value):
    e = euler_number(n)
    assert e == value
    assert e.denominator == 1


def test_euler_number_rejects_odd_or_negative():
    with pytest.raises(ValueError):
        euler_number(3)
    with pytest.raises(ValueError):
        euler_number(-2)
    with pytest.raises(ValueError):
        euler_poly(-1)


@pytest.mark.parametrize(
    "n, value",
    [
        (0, 1),
        (1, F(-1, 2)),
        (2, F(1, 6)),
        (3, 0),
        (4, F(-1, 30)),
        (6, F(1, 42)),
        (8, F(-1, 30)),
        (12, F(-691, 2730)),
    ],
)
def test_bernoulli_numbers(n, value):
    assert bernoulli(n) == value


def test_special_values_bundle():
    sv = special_values(4)
    assert sv.n == 4
    assert sv.euler_poly == euler_poly(4)
    assert sv.bernoulli == bernoulli(4)
    assert sv.euler_number == euler_number(4)
    assert special_values(3).euler_number is None


def test_identity_suite_all_pass():
    results = check_identities()
    assert len(results) == 6
    for r in results:
        assert r.passed, r.name


def test_memo_growth_is_consistent():
    # asking big first must give the same table as growing incrementally
    big = euler_poly(15)
    assert big.derivative() == 15 * euler_poly(14)
