import random
from fractions import Fraction

import pytest

from zetakernel.kernels import PiecewiseKernel, Split, closed_form, recurrence_step
from zetakernel.polynomials import BivarPoly, Poly

F = Fraction


def test_order_one_is_the_triangle_indicator():
    k = closed_form(1)
    assert k.split is Split.ANTIDIAGONAL
    assert k.branch_le == BivarPoly.constant(1)
    assert k.branch_ge == BivarPoly.zero()
    assert k.evaluate(F(1, 4), F(1, 4)) == 1
    assert k.evaluate(F(3, 4), F(3, 4)) == 0
    # theta(0) = 1/2 on the split line itself
    assert k.evaluate(F(1, 2), F(1, 2)) == F(1, 2)
    assert k.evaluate(F(1, 4), F(3, 4)) == F(1, 2)


def test_low_order_branches_match_hand_integration():
    k2 = closed_form(2)
    one = BivarPoly.constant(1)
    assert k2.split is Split.DIAGONAL
    assert k2.branch_ge == one - BivarPoly.u()  # u >= v: min(1-u, 1-v) = 1-u
    assert k2.branch_le == one - BivarPoly.v()
    k3 = closed_form(3)
    u, v = BivarPoly.u(), BivarPoly.v()
    assert k3.branch_le == (one - u * u - v * v) * F(1, 2)
    assert k3.branch_ge == (one - u) * (one - v)
    # integral of the triangle slice: K_3(0, 0) = 1/2
    assert k3.evaluate(0, 0) == F(1, 2)


@pytest.mark.parametrize("n", range(1, 9))
def test_recurrence_step_reproduces_closed_form(n):
    assert recurrence_step(closed_form(n)) == closed_form(n + 1)


@pytest.mark.parametrize("n", range(1, 11))
def test_kernel_symmetry(n):
    k = closed_form(n)
    if k.split is Split.DIAGONAL:
        # swapping u and v mirrors the diagonal branches into each other
        assert k.branch_le.swap() == k.branch_ge
    else:
        # an antidiagonal split is itself symmetric, branch by branch
        assert k.branch_le.swap() == k.branch_le
        assert k.branch_ge.swap() == k.branch_ge


@pytest.mark.parametrize("n", range(2, 11))
def test_branches_agree_on_split_line(n):
    k = closed_form(n)
    u = BivarPoly.u()
    if k.split is Split.DIAGONAL:
        on_line = lambda p: p.substitute("v", u).to_univariate("u")
    else:
        on_line = lambda p: p.substitute("v", BivarPoly.constant(1) - u).to_univariate("u")
    assert on_line(k.branch_le) == on_line(k.branch_ge)


def test_evaluate_picks_the_right_branch():
    k = closed_form(4)
    pt_ge = (F(3, 4), F(1, 4))  # u > v
    pt_le = (F(1, 4), F(3, 4))
    assert k.evaluate(*pt_ge) == k.branch_ge.evaluate(*pt_ge)
    assert k.evaluate(*pt_le) == k.branch_le.evaluate(*pt_le)
    assert k.evaluate(*pt_ge) == k.evaluate(*pt_le)  # symmetry at mirrored points


def test_evaluate_symmetry_at_random_points():
    rng = random.Random(11)
    for n in range(1, 7):
        k = closed_form(n)
        for _ in range(20):
            u = F(rng.randint(0, 64), 64)
            v = F(rng.randint(0, 64), 64)
            assert k.evaluate(u, v) == k.evaluate(v, u)


def test_evaluate_validates_domain():
    k = closed_form(2)
    with pytest.raises(ValueError):
        k.evaluate(F(3, 2), 0)
    with pytest.raises(ValueError):
        k.evaluate(0, -1)
    with pytest.raises(TypeError):
        k.evaluate(0.5, 0.5)


@pytest.mark.parametrize(
    "n, volume",
    [(2, F(1, 2)), (3, F(1, 4)), (4, F(1, 6)), (5, F(5, 48)), (6, F(1, 15))],
)
def test_traces_are_the_volumes(n, volume):
    assert closed_form(n).trace() == volume


def test_trace_of_order_one():
    # the cyclic constraint degenerates to 2u < 1, a segment of length 1/2
    assert closed_form(1).trace() == F(1, 2)


def test_diagonal_pieces():
    k3 = closed_form(3)
    pieces = k3.diagonal_pieces()
    assert [(lo, hi) for lo, hi, _ in pieces] == [(0, F(1, 2)), (F(1, 2), 1)]
    assert pieces[0][2] == Poly([F(1, 2), 0, -1])
    assert pieces[1][2] == Poly([1, -2, 1])
    with pytest.raises(ValueError):
        k3.diagonal_polynomial()
    assert closed_form(2).diagonal_polynomial() == Poly([1, -1])


def test_closed_form_rejects_nonpositive_order():
    with pytest.raises(ValueError):
        closed_form(0)
    with pytest.raises(ValueError):
        closed_form(-3)


def test_kernels_are_frozen_and_cached():
    a = closed_form(5)
    b = closed_form(5)
    assert a is b
    with pytest.raises(AttributeError):
        a.order = 6
