"""Piecewise kernels of the iterated triangle operator, the cyclic-polytope
volumes they trace out, and the zeta and beta-like constants those volumes
encode, every value reachable by at least two independent routes."""

from .euler import (
    IdentityResult,
    SpecialValues,
    bernoulli,
    check_identities,
    euler_number,
    euler_poly,
    special_values,
)
from .kernels import PiecewiseKernel, Split, closed_form, recurrence_step
from .mc import (
    McConfig,
    McEstimate,
    chunk_state,
    in_delta,
    mc_volume,
    mc_zeta_odd,
    splitmix64_next,
    word_to_double,
    xoshiro256ss_next,
)
from .polynomials import BivarPoly, Poly
from .zeta import (
    EndpointHandling,
    ExactConstant,
    QuadratureConfig,
    SeriesConfig,
    ToleranceNotReached,
    delta,
    s_odd,
    s_value,
    series_S,
    series_zeta,
    zeta_even,
    zeta_odd_integrand,
    zeta_odd_logtan,
    zeta_odd_quadrature,
)

__version__ = "0.1.0"

__all__ = [
    "BivarPoly",
    "EndpointHandling",
    "ExactConstant",
    "IdentityResult",
    "McConfig",
    "McEstimate",
    "PiecewiseKernel",
    "Poly",
    "QuadratureConfig",
    "SeriesConfig",
    "SpecialValues",
    "Split",
    "ToleranceNotReached",
    "bernoulli",
    "check_identities",
    "chunk_state",
    "closed_form",
    "delta",
    "euler_number",
    "euler_poly",
    "in_delta",
    "mc_volume",
    "mc_zeta_odd",
    "recurrence_step",
    "s_odd",
    "s_value",
    "series_S",
    "series_zeta",
    "special_values",
    "splitmix64_next",
    "word_to_double",
    "xoshiro256ss_next",
    "zeta_even",
    "zeta_odd_integrand",
    "zeta_odd_logtan",
    "zeta_odd_quadrature",
]
