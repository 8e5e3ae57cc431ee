"""Euler polynomials, Bernoulli numbers and Euler numbers, all exact.

Everything is built by purely rational recurrences (no transcendental
steps), and the classical identity suite doubles as a self-test:

* ``E_n(x) = x^n - (1/2) * sum_{k<n} C(n,k) E_k(x)``, the Appell-family
  recurrence equivalent to ``E_n(x) + E_n(x+1) = 2 x^n``.
* ``sum_{j<=m} C(m+1,j) B_j = 0`` with ``B_0 = 1`` (hence ``B_1 = -1/2``;
  only even indices are consumed downstream, where the convention between
  the two B_1 sign choices is immaterial).
* Euler numbers ``E_n = 2^n E_n(1/2)`` for even n; odd indices are
  rejected rather than silently returned as 0.

Tables grow on demand behind a lock; the cached Poly/Fraction values are
immutable, so concurrent readers are safe.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Optional

from .polynomials import Poly

_lock = threading.Lock()
_euler_table: list[Poly] = []
_bernoulli_table: list[Fraction] = []


def euler_poly(n: int) -> Poly:
    """The Euler polynomial E_n(x), memoized."""
    if n < 0:
        raise ValueError("Euler polynomial index must be >= 0")
    with _lock:
        while len(_euler_table) <= n:
            m = len(_euler_table)
            p = Poly([Fraction(0)] * m + [Fraction(1)])  # x^m
            for k in range(m):
                p = p - _euler_table[k] * Fraction(comb(m, k), 2)
            _euler_table.append(p)
        return _euler_table[n]


def bernoulli(n: int) -> Fraction:
    """The Bernoulli number B_n (B_1 = -1/2 convention), memoized."""
    if n < 0:
        raise ValueError("Bernoulli index must be >= 0")
    with _lock:
        while len(_bernoulli_table) <= n:
            m = len(_bernoulli_table)
            if m == 0:
                _bernoulli_table.append(Fraction(1))
                continue
            acc = Fraction(0)
            for j in range(m):
                acc += comb(m + 1, j) * _bernoulli_table[j]
            _bernoulli_table.append(-acc / (m + 1))
        return _bernoulli_table[n]


def euler_number(n: int) -> Fraction:
    """The Euler number E_n = 2^n E_n(1/2), defined for even n >= 0.

    Always an integer-valued Fraction.  Odd n raises: those are zero by
    convention but never legitimately consumed here, so asking for one is
    treated as a bug in the caller.
    """
    if n < 0 or n % 2 != 0:
        raise ValueError("Euler numbers are only provided for even n >= 0")
    return Fraction(2) ** n * euler_poly(n)(Fraction(1, 2))


@dataclass(frozen=True)
class SpecialValues:
    """E_n(x), B_n and (for even n) the Euler number E_n, bundled."""

    n: int
    euler_poly: Poly
    bernoulli: Fraction
    euler_number: Optional[Fraction]


def special_values(n: int) -> SpecialValues:
    if n < 0:
        raise ValueError("index must be >= 0")
    en = euler_number(n) if n % 2 == 0 else None
    return SpecialValues(n=n, euler_poly=euler_poly(n), bernoulli=bernoulli(n), euler_number=en)


@dataclass(frozen=True)
class IdentityResult:
    name: str
    index_range: str
    passed: bool


def check_identities() -> list[IdentityResult]:
    """Run the classical identity suite; each entry is an exact check.

    Exercised by the CLI ``identities`` subcommand and by the test suite.
    """
    results = []

    ok = all(euler_poly(n).derivative() == euler_poly(n - 1) * n for n in range(1, 25))
    results.append(IdentityResult("derivative: E_n'(x) = n*E_{n-1}(x)", "n = 1..24", ok))

    ok = all(
        euler_poly(n).compose(Fraction(-1), Fraction(1)) == euler_poly(n) * Fraction((-1) ** n)
        for n in range(0, 25)
    )
    results.append(IdentityResult("reflection: E_n(1-x) = (-1)^n*E_n(x)", "n = 0..24", ok))

    ok = all(
        euler_poly(2 * n - 1) == euler_poly(2 * n).derivative() * Fraction(1, 2 * n)
        for n in range(1, 13)
    )
    results.append(
        IdentityResult("odd from even: E_{2n-1}(x) = E_{2n}'(x)/(2n)", "n = 1..12", ok)
    )

    ok = all(
        euler_poly(2 * n - 1)(0)
        == -Fraction(2, 2 * n) * (2 ** (2 * n) - 1) * bernoulli(2 * n)
        for n in range(1, 13)
    )
    results.append(
        IdentityResult(
            "value at 0: E_{2n-1}(0) = -(2/(2n))*(2^(2n)-1)*B_{2n}", "n = 1..12", ok
        )
    )

    half = Fraction(1, 2)
    ok = True
    for n in range(0, 12):
        p = euler_poly(2 * n + 1)
        # E((1-v)/2) + E((1+v)/2) as a bivariate expression in v alone.
        total = p.compose_affine(0, -half, half) + p.compose_affine(0, half, half)
        ok = ok and not total
    results.append(
        IdentityResult(
            "half-argument antisymmetry: E_{2n+1}((1-v)/2) + E_{2n+1}((1+v)/2) = 0",
            "n = 0..11",
            ok,
        )
    )

    ok = all(
        euler_poly(2 * n)(0) == 0 and euler_poly(2 * n)(1) == 0 for n in range(1, 13)
    )
    results.append(IdentityResult("even vanishing: E_{2n}(0) = E_{2n}(1) = 0", "n = 1..12", ok))

    return results
