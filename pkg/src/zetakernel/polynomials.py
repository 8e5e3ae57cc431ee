"""Exact polynomial algebra over the rationals, univariate and bivariate.

Scalars are ``fractions.Fraction`` throughout: arbitrary precision, always
reduced, positive denominator.  That makes structural equality of
polynomials decide mathematical equality, which the kernel verifier relies
on.  ``str(Fraction)`` already renders the canonical "p/q" form (the
denominator is omitted when it equals 1).

Two immutable types:

* :class:`Poly` -- univariate, dense ascending coefficient tuple with
  trailing zeros stripped; the zero polynomial has degree -1.
* :class:`BivarPoly` -- bivariate in (u, v), sparse map from exponent
  pairs ``(i, j)`` (meaning ``u^i * v^j``) to coefficients; zero
  coefficients are never stored.

Both are plain value objects: all operations return new instances, so
sharing across threads is safe.  Printing uses graded-lexicographic
monomial order with u before v, e.g. ``1/4*u^2*v - 1/2*v``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

Scalar = Union[Fraction, int]


def _as_fraction(value: Scalar) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact scalar (Fraction or int), got {type(value).__name__}")


def _join_terms(rendered: list[str]) -> str:
    """Join signed term strings with ' + ' / ' - ' separators."""
    if not rendered:
        return "0"
    out = rendered[0]
    for term in rendered[1:]:
        if term.startswith("-"):
            out += " - " + term[1:]
        else:
            out += " + " + term
    return out


def _render_term(coeff: Fraction, monomial: str) -> str:
    if not monomial:
        return str(coeff)
    if coeff == 1:
        return monomial
    if coeff == -1:
        return "-" + monomial
    return f"{coeff}*{monomial}"


class Poly:
    """Univariate polynomial with exact rational coefficients.

    Coefficients are stored in ascending degree; the representation is
    canonical (no trailing zeros), so ``==`` is mathematical equality.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def zero(cls) -> Poly:
        return cls(())

    @classmethod
    def constant(cls, c: Scalar) -> Poly:
        return cls((c,))

    @classmethod
    def x(cls) -> Poly:
        """The identity polynomial x."""
        return cls((0, 1))

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial assigned -1."""
        return len(self._coeffs) - 1

    def coeff(self, i: int) -> Fraction:
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return Fraction(0)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __add__(self, other: Poly) -> Poly:
        if not isinstance(other, Poly):
            return NotImplemented
        n = max(len(self._coeffs), len(other._coeffs))
        return Poly(self.coeff(i) + other.coeff(i) for i in range(n))

    def __sub__(self, other: Poly) -> Poly:
        if not isinstance(other, Poly):
            return NotImplemented
        n = max(len(self._coeffs), len(other._coeffs))
        return Poly(self.coeff(i) - other.coeff(i) for i in range(n))

    def __neg__(self) -> Poly:
        return Poly(-c for c in self._coeffs)

    def __mul__(self, other: Union[Poly, Scalar]) -> Poly:
        if isinstance(other, Poly):
            if not self._coeffs or not other._coeffs:
                return Poly.zero()
            out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
            for i, a in enumerate(self._coeffs):
                for j, b in enumerate(other._coeffs):
                    out[i + j] += a * b
            return Poly(out)
        q = _as_fraction(other)
        return Poly(c * q for c in self._coeffs)

    def __rmul__(self, other: Scalar) -> Poly:
        return self.__mul__(other)

    def __pow__(self, n: int) -> Poly:
        if n < 0:
            raise ValueError("negative polynomial power")
        out = Poly.constant(1)
        for _ in range(n):
            out = out * self
        return out

    def __call__(self, x: Scalar) -> Fraction:
        """Exact evaluation by Horner's rule."""
        xq = _as_fraction(x)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * xq + c
        return acc

    def derivative(self) -> Poly:
        return Poly(i * c for i, c in enumerate(self._coeffs) if i >= 1)

    def definite_integral(self, lo: Scalar, hi: Scalar) -> Fraction:
        """Exact integral over [lo, hi] by the power rule."""
        lo_q, hi_q = _as_fraction(lo), _as_fraction(hi)
        total = Fraction(0)
        for i, c in enumerate(self._coeffs):
            total += c * (hi_q ** (i + 1) - lo_q ** (i + 1)) / (i + 1)
        return total

    def compose(self, a: Scalar, c: Scalar) -> Poly:
        """Univariate affine composition p(a*x + c)."""
        inner = Poly((c, a))
        out = Poly.zero()
        power = Poly.constant(1)
        for coeff in self._coeffs:
            out = out + power * coeff
            power = power * inner
        return out

    def compose_affine(self, a_u: Scalar, a_v: Scalar, c: Scalar) -> BivarPoly:
        """Bivariate affine composition p(a_u*u + a_v*v + c), expanded."""
        inner = BivarPoly({(1, 0): a_u, (0, 1): a_v, (0, 0): c})
        out = BivarPoly.zero()
        power = BivarPoly.constant(1)
        for coeff in self._coeffs:
            out = out + power * coeff
            power = power * inner
        return out

    def float_coeffs(self) -> list[float]:
        """Ascending coefficients rounded to double precision (numeric layer)."""
        return [float(c) for c in self._coeffs]

    def __str__(self) -> str:
        rendered = []
        for i in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[i]
            if c == 0:
                continue
            if i == 0:
                mono = ""
            elif i == 1:
                mono = "x"
            else:
                mono = f"x^{i}"
            rendered.append(_render_term(c, mono))
        return _join_terms(rendered)

    def __repr__(self) -> str:
        return f"Poly({self})"


class BivarPoly:
    """Bivariate polynomial in (u, v) with exact rational coefficients.

    Stored sparsely as ``{(i, j): coeff}`` for the monomial ``u^i * v^j``;
    zero coefficients are dropped on construction, so ``==`` is term-wise
    mathematical equality.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], Scalar] = ()):
        store: dict[tuple[int, int], Fraction] = {}
        for (i, j), c in dict(terms).items():
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent in monomial ({i}, {j})")
            q = _as_fraction(c)
            if q:
                store[(int(i), int(j))] = q
        self._terms = store

    @classmethod
    def zero(cls) -> BivarPoly:
        return cls({})

    @classmethod
    def constant(cls, c: Scalar) -> BivarPoly:
        return cls({(0, 0): c})

    @classmethod
    def u(cls) -> BivarPoly:
        return cls({(1, 0): 1})

    @classmethod
    def v(cls) -> BivarPoly:
        return cls({(0, 1): 1})

    @property
    def terms(self) -> dict[tuple[int, int], Fraction]:
        return dict(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, BivarPoly):
            return self._terms == other._terms
        return NotImplemented

    def __add__(self, other: BivarPoly) -> BivarPoly:
        if not isinstance(other, BivarPoly):
            return NotImplemented
        out = dict(self._terms)
        for mono, c in other._terms.items():
            out[mono] = out.get(mono, Fraction(0)) + c
        return BivarPoly(out)

    def __sub__(self, other: BivarPoly) -> BivarPoly:
        if not isinstance(other, BivarPoly):
            return NotImplemented
        out = dict(self._terms)
        for mono, c in other._terms.items():
            out[mono] = out.get(mono, Fraction(0)) - c
        return BivarPoly(out)

    def __neg__(self) -> BivarPoly:
        return BivarPoly({mono: -c for mono, c in self._terms.items()})

    def __mul__(self, other: Union[BivarPoly, Scalar]) -> BivarPoly:
        if isinstance(other, BivarPoly):
            out: dict[tuple[int, int], Fraction] = {}
            for (i1, j1), c1 in self._terms.items():
                for (i2, j2), c2 in other._terms.items():
                    mono = (i1 + i2, j1 + j2)
                    out[mono] = out.get(mono, Fraction(0)) + c1 * c2
            return BivarPoly(out)
        q = _as_fraction(other)
        return BivarPoly({mono: c * q for mono, c in self._terms.items()})

    def __rmul__(self, other: Scalar) -> BivarPoly:
        return self.__mul__(other)

    def evaluate(self, u: Scalar, v: Scalar) -> Fraction:
        uq, vq = _as_fraction(u), _as_fraction(v)
        total = Fraction(0)
        for (i, j), c in self._terms.items():
            total += c * uq**i * vq**j
        return total

    def degree_in(self, var: str) -> int:
        """Maximal exponent of ``var`` (-1 for the zero polynomial)."""
        idx = _var_index(var)
        if not self._terms:
            return -1
        return max(mono[idx] for mono in self._terms)

    def diff(self, var: str) -> BivarPoly:
        idx = _var_index(var)
        out: dict[tuple[int, int], Fraction] = {}
        for mono, c in self._terms.items():
            e = mono[idx]
            if e == 0:
                continue
            new = (mono[0] - 1, mono[1]) if idx == 0 else (mono[0], mono[1] - 1)
            out[new] = out.get(new, Fraction(0)) + c * e
        return BivarPoly(out)

    def antiderivative(self, var: str) -> BivarPoly:
        """The antiderivative in ``var`` with no constant of integration."""
        idx = _var_index(var)
        out: dict[tuple[int, int], Fraction] = {}
        for mono, c in self._terms.items():
            e = mono[idx]
            new = (mono[0] + 1, mono[1]) if idx == 0 else (mono[0], mono[1] + 1)
            out[new] = c / (e + 1)
        return BivarPoly(out)

    def substitute(self, var: str, replacement: BivarPoly) -> BivarPoly:
        """Substitute ``var := replacement(u, v)`` simultaneously and expand.

        The replacement may mention either variable (including ``var``
        itself); the substitution is a composition, not an iteration.
        """
        idx = _var_index(var)
        top = self.degree_in(var)
        if top <= -1:
            return self
        # Powers of the replacement, computed once.
        powers = [BivarPoly.constant(1)]
        for _ in range(top):
            powers.append(powers[-1] * replacement)
        out = BivarPoly.zero()
        for (i, j), c in self._terms.items():
            e = (i, j)[idx]
            rest = (0, j) if idx == 0 else (i, 0)
            out = out + BivarPoly({rest: c}) * powers[e]
        return out

    def substitute_affine(self, var: str, a: Scalar, c: Scalar) -> BivarPoly:
        """Substitute ``var := a*other + c`` (other = the remaining variable).

        The result has degree 0 in ``var``.
        """
        other = BivarPoly.v() if _var_index(var) == 0 else BivarPoly.u()
        return self.substitute(var, other * a + BivarPoly.constant(c))

    def swap(self) -> BivarPoly:
        """Exchange u and v; an involution."""
        return BivarPoly({(j, i): c for (i, j), c in self._terms.items()})

    def to_univariate(self, var: str = "u") -> Poly:
        """Reinterpret as a univariate Poly in ``var``.

        Requires the other variable to be absent.
        """
        idx = _var_index(var)
        other_idx = 1 - idx
        coeffs: dict[int, Fraction] = {}
        for mono, c in self._terms.items():
            if mono[other_idx] != 0:
                raise ValueError(f"polynomial still involves the other variable: {self}")
            coeffs[mono[idx]] = c
        if not coeffs:
            return Poly.zero()
        top = max(coeffs)
        return Poly(coeffs.get(i, Fraction(0)) for i in range(top + 1))

    def __str__(self) -> str:
        # Graded-lex order, u before v, printed from the largest monomial down.
        ordered = sorted(self._terms, key=lambda m: (m[0] + m[1], m[0]), reverse=True)
        rendered = []
        for i, j in ordered:
            parts = []
            if i == 1:
                parts.append("u")
            elif i > 1:
                parts.append(f"u^{i}")
            if j == 1:
                parts.append("v")
            elif j > 1:
                parts.append(f"v^{j}")
            rendered.append(_render_term(self._terms[(i, j)], "*".join(parts)))
        return _join_terms(rendered)

    def __repr__(self) -> str:
        return f"BivarPoly({self})"


def _var_index(var: str) -> int:
    if var == "u":
        return 0
    if var == "v":
        return 1
    raise ValueError(f"unknown variable {var!r}, expected 'u' or 'v'")
