"""Piecewise-polynomial kernels of the iterated triangle operator.

The operator at the bottom of everything maps f to
``(T f)(u) = integral_0^{1-u} f(v) dv`` on [0, 1]; its kernel is the
indicator of the open triangle u, v > 0, u + v < 1 (taken as 1/2 on the
boundary line, which no integral ever sees).  The order-n kernel is the
kernel of T^n, i.e. the (n-1)-fold convolution
``K_n(u, v) = integral_0^1 K_1(u, t) K_{n-1}(t, v) dt``, and its trace
``integral_0^1 K_n(u, u) du`` is the volume of the n-dimensional cyclic
polytope ``{u_i > 0, u_i + u_{i+1} < 1 (indices mod n)}``.

Every order is a pair of bivariate polynomial branches meeting along a
split line that alternates with parity:

* odd order: split along u + v = 1, branches built from even-index Euler
  polynomials with prefactor ``(-1)^m 2^(2m-1)/(2m)!`` (order 2m+1):
  ``[E_{2m}((1-u+v)/2) + E_{2m}((1-u-v)/2)]`` below the line and
  ``[E_{2m}((1-u+v)/2) - E_{2m}((u+v-1)/2)]`` above it;
* even order: split along u = v, branches built from odd-index Euler
  polynomials with prefactor ``(-1)^m 2^(2m-2)/(2m-1)!`` (order 2m):
  ``[E_{2m-1}((u+v)/2) + E_{2m-1}((u-v)/2)]`` where u >= v, mirrored
  where v >= u.

:func:`closed_form` builds those branches directly; :func:`recurrence_step`
performs one exact symbolic convolution.  Structural equality of the two
routes at every order is the central invariant of this package.
"""

from __future__ import annotations

import enum
import threading
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .euler import euler_poly
from .polynomials import BivarPoly, Poly, Scalar, _as_fraction


class Split(enum.Enum):
    """Orientation of the line where the two branches meet."""

    DIAGONAL = "u = v"          # split expression u - v; even orders
    ANTIDIAGONAL = "u + v = 1"  # split expression u + v - 1; odd orders


@dataclass(frozen=True)
class PiecewiseKernel:
    """Order-n kernel: two polynomial branches split along a line.

    ``branch_le`` applies where the split expression (u - v for DIAGONAL,
    u + v - 1 for ANTIDIAGONAL) is <= 0, ``branch_ge`` where it is >= 0.
    On the line itself evaluation averages the branches (the step-function
    convention theta(0) = 1/2), which coincides with either branch for
    orders >= 2 because the branches agree there.
    """

    order: int
    split: Split
    branch_le: BivarPoly
    branch_ge: BivarPoly

    def _split_sign(self, u: Fraction, v: Fraction) -> int:
        expr = (u - v) if self.split is Split.DIAGONAL else (u + v - 1)
        return (expr > 0) - (expr < 0)

    def evaluate(self, u: Scalar, v: Scalar) -> Fraction:
        """Exact value at a rational point of [0, 1]^2."""
        uq, vq = _as_fraction(u), _as_fraction(v)
        if not (0 <= uq <= 1 and 0 <= vq <= 1):
            raise ValueError(f"point ({uq}, {vq}) outside the unit square")
        sign = self._split_sign(uq, vq)
        if sign < 0:
            return self.branch_le.evaluate(uq, vq)
        if sign > 0:
            return self.branch_ge.evaluate(uq, vq)
        return (self.branch_le.evaluate(uq, vq) + self.branch_ge.evaluate(uq, vq)) / 2

    def diagonal_pieces(self) -> tuple[tuple[Fraction, Fraction, Poly], ...]:
        """The restriction u -> K(u, u) as (lo, hi, polynomial) pieces.

        A DIAGONAL-split kernel runs along its own split line, where both
        branches agree, so there is a single piece.  An ANTIDIAGONAL-split
        kernel crosses u + v = 1 at u = 1/2: branch_le applies on
        [0, 1/2], branch_ge on [1/2, 1].
        """
        u = BivarPoly.u()
        if self.split is Split.DIAGONAL:
            piece = self.branch_le.substitute("v", u).to_univariate("u")
            return ((Fraction(0), Fraction(1), piece),)
        lo = self.branch_le.substitute("v", u).to_univariate("u")
        hi = self.branch_ge.substitute("v", u).to_univariate("u")
        half = Fraction(1, 2)
        return ((Fraction(0), half, lo), (half, Fraction(1), hi))

    def diagonal_polynomial(self) -> Poly:
        """K(u, u) as a single polynomial; only even orders have one."""
        pieces = self.diagonal_pieces()
        if len(pieces) != 1:
            raise ValueError("the diagonal of an odd-order kernel is piecewise")
        return pieces[0][2]

    def trace(self) -> Fraction:
        """The exact trace, i.e. the cyclic-polytope volume of this order."""
        return sum(
            (poly.definite_integral(lo, hi) for lo, hi, poly in self.diagonal_pieces()),
            Fraction(0),
        )


_cache_lock = threading.Lock()
_closed_cache: dict[int, PiecewiseKernel] = {}


def closed_form(n: int) -> PiecewiseKernel:
    """The order-n kernel assembled directly from Euler polynomials."""
    if n < 1:
        raise ValueError("kernel order must be >= 1")
    with _cache_lock:
        kernel = _closed_cache.get(n)
        if kernel is None:
            kernel = _build_closed_form(n)
            _closed_cache[n] = kernel
        return kernel


def _build_closed_form(n: int) -> PiecewiseKernel:
    half = Fraction(1, 2)
    if n % 2 == 0:
        m = n // 2
        pref = Fraction((-1) ** m) * Fraction(2) ** (2 * m - 2) / factorial(2 * m - 1)
        e = euler_poly(2 * m - 1)
        mid = e.compose_affine(half, half, 0)          # E((u+v)/2)
        ge = (mid + e.compose_affine(half, -half, 0)) * pref    # + E((u-v)/2), u >= v
        le = (mid + e.compose_affine(-half, half, 0)) * pref    # + E((v-u)/2), v >= u
        return PiecewiseKernel(n, Split.DIAGONAL, le, ge)
    m = (n - 1) // 2
    pref = Fraction((-1) ** m) * Fraction(2) ** (2 * m - 1) / factorial(2 * m)
    e = euler_poly(2 * m)
    mid = e.compose_affine(-half, half, half)          # E((1-u+v)/2)
    le = (mid + e.compose_affine(-half, -half, half)) * pref    # + E((1-u-v)/2), u+v <= 1
    ge = (mid - e.compose_affine(half, half, -half)) * pref     # - E((u+v-1)/2), u+v >= 1
    return PiecewiseKernel(n, Split.ANTIDIAGONAL, le, ge)


def _segment_integral(branch: BivarPoly, lo: BivarPoly, hi: BivarPoly) -> BivarPoly:
    """integral_{lo}^{hi} branch(t, v) dt with affine bounds in (u, v).

    The u-slot of ``branch`` plays the role of the integration variable t;
    substituting the bounds re-uses that slot for the output u.
    """
    anti = branch.antiderivative("u")
    return anti.substitute("u", hi) - anti.substitute("u", lo)


def recurrence_step(kernel: PiecewiseKernel) -> PiecewiseKernel:
    """Convolve once: the order n+1 kernel integral_0^{1-u} K_n(t, v) dt.

    The integrand's branches switch at t = 1 - v (ANTIDIAGONAL input) or
    t = v (DIAGONAL input).  Comparing that breakpoint with the upper
    limit 1 - u splits the (u, v) square along the *other* line, which is
    why the split orientation alternates with order:

    * breakpoint >= 1 - u: the whole range [0, 1-u] lies below the
      breakpoint, so only branch_le contributes;
    * breakpoint <= 1 - u: branch_le covers [0, breakpoint] and branch_ge
      covers [breakpoint, 1-u].
    """
    zero = BivarPoly.zero()
    one = BivarPoly.constant(1)
    upper = one - BivarPoly.u()  # 1 - u
    if kernel.split is Split.ANTIDIAGONAL:
        breakpoint_ = one - BivarPoly.v()
        # 1 - v >= 1 - u  <=>  u >= v: the branch_ge side of the new DIAGONAL split.
        ge = _segment_integral(kernel.branch_le, zero, upper)
        le = _segment_integral(kernel.branch_le, zero, breakpoint_) + _segment_integral(
            kernel.branch_ge, breakpoint_, upper
        )
        return PiecewiseKernel(kernel.order + 1, Split.DIAGONAL, le, ge)
    breakpoint_ = BivarPoly.v()
    # v >= 1 - u  <=>  u + v >= 1: the branch_ge side of the new ANTIDIAGONAL split.
    ge = _segment_integral(kernel.branch_le, zero, upper)
    le = _segment_integral(kernel.branch_le, zero, breakpoint_) + _segment_integral(
        kernel.branch_ge, breakpoint_, upper
    )
    return PiecewiseKernel(kernel.order + 1, Split.ANTIDIAGONAL, le, ge)
