import random
from fractions import Fraction

import pytest

from zetakernel.polynomials import BivarPoly, Poly


def rand_fraction(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-9, 9), rng.randint(1, 9))


def rand_poly(rng: random.Random) -> Poly:
    return Poly([rand_fraction(rng) for _ in range(rng.randint(0, 6))])


def rand_bivar(rng: random.Random) -> BivarPoly:
    terms = {}
    for _ in range(rng.randint(0, 8)):
        terms[(rng.randint(0, 3), rng.randint(0, 3))] = rand_fraction(rng)
    return BivarPoly(terms)


def test_poly_ring_axioms():
    rng = random.Random(0)
    for _ in range(25):
        p, q, r = rand_poly(rng), rand_poly(rng), rand_poly(rng)
        assert p + q == q + p
        assert p * q == q * p
        assert (p + q) + r == p + (q + r)
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r
        assert p + Poly.zero() == p
        assert p * Poly.constant(1) == p
        assert p - p == Poly.zero()


def test_poly_evaluation_matches_termwise():
    rng = random.Random(1)
    for _ in range(20):
        p = rand_poly(rng)
        x = rand_fraction(rng)
        direct = sum((c * x ** i for i, c in enumerate(p.coeffs)), Fraction(0))
        assert p(x) == direct


def test_poly_canonical_form():
    assert Poly([1, 2, 0, 0]) == Poly([1, 2])
    assert Poly.zero().degree == -1
    assert not Poly.zero()
    assert Poly.x().degree == 1
    assert Poly([Fraction(1, 2)]).coeff(0) == Fraction(1, 2)
    assert Poly([1]).coeff(5) == 0


def test_poly_rejects_floats():
    with pytest.raises(TypeError):
        Poly([0.5])
    with pytest.raises(TypeError):
        Poly.x()(0.5)


def test_poly_derivative_and_integral():
    rng = random.Random(2)
    for _ in range(20):
        p = rand_poly(rng)
        lo, hi = rand_fraction(rng), rand_fraction(rng)
        expected = sum(
            (c * (hi ** (i + 1) - lo ** (i + 1)) / (i + 1) for i, c in enumerate(p.coeffs)),
            Fraction(0),
        )
        assert p.definite_integral(lo, hi) == expected
    p = Poly([0, 0, 0, 1])  # x^3
    assert p.derivative() == Poly([0, 0, 3])


def test_poly_compose_is_evaluation_homomorphism():
    rng = random.Random(3)
    for _ in range(20):
        p = rand_poly(rng)
        a, c, x = rand_fraction(rng), rand_fraction(rng), rand_fraction(rng)
        assert p.compose(a, c)(x) == p(a * x + c)


def test_compose_affine_into_two_variables():
    rng = random.Random(4)
    for _ in range(20):
        p = rand_poly(rng)
        au, av, c = rand_fraction(rng), rand_fraction(rng), rand_fraction(rng)
        u, v = rand_fraction(rng), rand_fraction(rng)
        q = p.compose_affine(au, av, c)
        assert q.evaluate(u, v) == p(au * u + av * v + c)


def test_compose_affine_euler_style_example():
    # (x^2 - x) at (1 + v)/2 collapses to (1/4)v^2 - 1/4
    p = Poly([0, -1, 1])
    q = p.compose_affine(0, Fraction(1, 2), Fraction(1, 2))
    assert q == BivarPoly({(0, 2): Fraction(1, 4), (0, 0): Fraction(-1, 4)})


def test_bivar_ring_axioms():
    rng = random.Random(5)
    for _ in range(25):
        p, q, r = rand_bivar(rng), rand_bivar(rng), rand_bivar(rng)
        assert p + q == q + p
        assert p * q == q * p
        assert p * (q + r) == p * q + p * r
        assert p - p == BivarPoly.zero()
        u, v = rand_fraction(rng), rand_fraction(rng)
        assert (p * q).evaluate(u, v) == p.evaluate(u, v) * q.evaluate(u, v)


def test_bivar_substitute_general():
    rng = random.Random(6)
    for _ in range(20):
        p, repl = rand_bivar(rng), rand_bivar(rng)
        a, b = rand_fraction(rng), rand_fraction(rng)
        # u := repl(u, v), simultaneous, so the old u never leaks through
        assert p.substitute("u", repl).evaluate(a, b) == p.evaluate(repl.evaluate(a, b), b)
        assert p.substitute("v", repl).evaluate(a, b) == p.evaluate(a, repl.evaluate(a, b))


def test_bivar_substitute_affine_agrees_with_general():
    rng = random.Random(7)
    for _ in range(20):
        p = rand_bivar(rng)
        a, c = rand_fraction(rng), rand_fraction(rng)
        direct = p.substitute_affine("u", a, c)
        via_general = p.substitute("u", a * BivarPoly.v() + BivarPoly.constant(c))
        assert direct == via_general


def test_bivar_antiderivative_roundtrip():
    rng = random.Random(8)
    for _ in range(20):
        p = rand_bivar(rng)
        for var in ("u", "v"):
            assert p.antiderivative(var).diff(var) == p


def test_bivar_swap():
    rng = random.Random(9)
    for _ in range(10):
        p = rand_bivar(rng)
        assert p.swap().swap() == p
        a, b = rand_fraction(rng), rand_fraction(rng)
        assert p.swap().evaluate(a, b) == p.evaluate(b, a)


def test_bivar_to_univariate():
    p = BivarPoly({(2, 0): Fraction(1), (0, 0): Fraction(-1, 2)})
    assert p.to_univariate("u") == Poly([Fraction(-1, 2), 0, 1])
    with pytest.raises(ValueError):
        (BivarPoly.u() * BivarPoly.v()).to_univariate("u")


def test_bivar_rejects_negative_exponents_and_floats():
    with pytest.raises(ValueError):
        BivarPoly({(-1, 0): Fraction(1)})
    with pytest.raises(TypeError):
        BivarPoly({(0, 0): 0.5})


def test_str_formats():
    assert str(BivarPoly({(2, 1): Fraction(1, 4), (0, 1): Fraction(-1, 2)})) == "1/4*u^2*v - 1/2*v"
    assert str(Poly([1, -2, 1])) == "x^2 - 2*x + 1"
    assert str(Poly.zero()) == "0"
    assert str(BivarPoly.zero()) == "0"
    assert str(Poly([Fraction(-1, 2)])) == "-1/2"


def test_float_coeffs():
    assert Poly([Fraction(1, 2), 3]).float_coeffs() == [0.5, 3.0]
