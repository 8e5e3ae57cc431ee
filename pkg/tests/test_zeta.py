import math
from fractions import Fraction

import pytest

from zetakernel.zeta import (
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

F = Fraction

# frozen from the alternating-series oracle (and agreeing with the exact
# formulas below to the last digit shown)
ZETA = {2: 1.6449340668482264, 3: 1.2020569031595942, 4: 1.0823232337111382,
        5: 1.0369277551433699, 6: 1.0173430619844491, 7: 1.0083492773819228}


@pytest.mark.parametrize("n", range(2, 13))
def test_delta_routes_agree(n):
    assert delta(n, "trace") == delta(n, "closed")


@pytest.mark.parametrize(
    "n, value",
    [(2, F(1, 2)), (3, F(1, 4)), (4, F(1, 6)), (5, F(5, 48)), (6, F(1, 15))],
)
def test_delta_spot_values(n, value):
    assert delta(n) == value


def test_delta_domain_and_method():
    with pytest.raises(ValueError):
        delta(1)
    with pytest.raises(ValueError):
        delta(3, "guess")


def test_exact_constant_behaviour():
    c = ExactConstant(F(1, 6), 2)
    assert str(c) == "1/6 * pi^2"
    assert c.numeric() == pytest.approx(math.pi ** 2 / 6, rel=1e-15)
    assert str(ExactConstant(F(1, 4), 1)) == "1/4 * pi"
    assert str(ExactConstant(F(3, 7), 0)) == "3/7"
    with pytest.raises(ValueError):
        ExactConstant(F(1), -1)


@pytest.mark.parametrize(
    "n, rational",
    [(2, F(1, 8)), (3, F(1, 32)), (4, F(1, 96)), (5, F(5, 1536)), (6, F(1, 960))],
)
def test_s_value_table(n, rational):
    c = s_value(n)
    assert (c.rational_part, c.pi_power) == (rational, n)


@pytest.mark.parametrize(
    "n, rational",
    [(1, F(1, 6)), (2, F(1, 90)), (3, F(1, 945)), (4, F(1, 9450))],
)
def test_zeta_even_table(n, rational):
    c = zeta_even(n)
    assert (c.rational_part, c.pi_power) == (rational, 2 * n)


@pytest.mark.parametrize(
    "n, rational",
    [(0, F(1, 4)), (1, F(1, 32)), (2, F(5, 1536))],
)
def test_s_odd_table(n, rational):
    c = s_odd(n)
    assert (c.rational_part, c.pi_power) == (rational, 2 * n + 1)


def test_exact_route_consistency():
    for n in range(1, 7):
        lhs = s_value(2 * n).rational_part
        assert lhs == (1 - F(1, 4 ** n)) * zeta_even(n).rational_part
    for n in range(1, 6):
        assert s_value(2 * n + 1).rational_part == s_odd(n).rational_part


def test_domain_errors():
    with pytest.raises(ValueError):
        s_value(1)
    with pytest.raises(ValueError):
        zeta_even(0)
    with pytest.raises(ValueError):
        s_odd(-1)
    with pytest.raises(ValueError):
        zeta_odd_quadrature(0)
    with pytest.raises(ValueError):
        zeta_odd_logtan(0)
    with pytest.raises(ValueError):
        series_S(1)
    with pytest.raises(ValueError):
        series_zeta(1)


def test_config_validation():
    with pytest.raises(ValueError):
        QuadratureConfig(panels=0)
    with pytest.raises(ValueError):
        QuadratureConfig(nodes_per_panel=1)
    with pytest.raises(ValueError):
        SeriesConfig(tolerance=0.0)
    with pytest.raises(ValueError):
        SeriesConfig(max_terms=0)


@pytest.mark.parametrize("s", [2, 3, 4, 5, 6, 7])
def test_series_zeta_against_frozen_references(s):
    assert series_zeta(s, SeriesConfig(tolerance=1e-13)) == pytest.approx(ZETA[s], abs=1e-12)


def test_series_zeta_tolerance_not_reached():
    with pytest.raises(ToleranceNotReached):
        series_zeta(2, SeriesConfig(tolerance=1e-12, max_terms=100))


def test_series_S_matches_exact_values():
    cfg = SeriesConfig(tolerance=1e-8)
    for n in range(2, 11):
        assert abs(series_S(n, cfg) - s_value(n).numeric()) < 2e-8


def test_series_S_tolerance_not_reached():
    with pytest.raises(ToleranceNotReached):
        series_S(2, SeriesConfig(tolerance=1e-12, max_terms=1000))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_quadrature_route(n):
    assert abs(zeta_odd_quadrature(n) - ZETA.get(2 * n + 1, series_zeta(2 * n + 1))) < 1e-10


def test_quadrature_endpoint_modes_agree_exactly():
    for handling in EndpointHandling:
        cfg = QuadratureConfig(endpoint_handling=handling)
        assert zeta_odd_quadrature(1, cfg) == zeta_odd_quadrature(1)


def test_integrand_endpoints_are_the_limits():
    # E_2(u)/sin(pi u) -> -1/pi at both ends (L'Hopital)
    assert zeta_odd_integrand(1, 0.0) == pytest.approx(-1 / math.pi, rel=1e-15)
    assert zeta_odd_integrand(1, 1.0) == pytest.approx(-1 / math.pi, rel=1e-15)
    # continuous: a nearby interior point sits close to the limit
    assert zeta_odd_integrand(1, 1e-8) == pytest.approx(-1 / math.pi, abs=1e-7)
    with pytest.raises(ValueError):
        zeta_odd_integrand(1, 1.5)


def test_quadrature_convergence_doubling_panels():
    ref = ZETA[3]
    errs = [
        abs(zeta_odd_quadrature(1, QuadratureConfig(panels=p, nodes_per_panel=3)) - ref)
        for p in (1, 2, 4, 8, 16, 32, 64)
    ]
    for a, b in zip(errs, errs[1:]):
        assert b < a or max(a, b) < 1e-13  # decays until the double-precision floor
    assert errs[-1] < 1e-12


@pytest.mark.parametrize("n", [1, 2, 3])
def test_logtan_route(n):
    assert abs(zeta_odd_logtan(n) - series_zeta(2 * n + 1, SeriesConfig(tolerance=1e-13))) < 1e-8


def test_logtan_error_decays_with_panels():
    ref = ZETA[3]
    errs = [abs(zeta_odd_logtan(1, QuadratureConfig(panels=p)) - ref) for p in (1, 2, 4, 8)]
    assert errs[3] < errs[0]
