"""Tests for series terms, partial sums, tail integrals and the direct-summation estimate."""

import pytest

from app.core.exceptions import DomainError
from app.features.series.series_models import SeriesFamily, SeriesSpec
from app.features.series.series_service import (
    derivative,
    estimate_direct_terms,
    partial_sum,
    render_direct_terms,
    tail_integral,
    tail_integral_between,
    tail_integral_quadrature,
    term,
)
from app.shared.atoms import differentiate
from app.shared.hpreal import format_fixed
from app.shared.hpreal.hpreal_models import PrecisionContext


def test_term_first_c_term(c2_spec: SeriesSpec, precision: PrecisionContext) -> None:
    """k = 3 of the alpha = 2 C-series is about 34.3."""
    mp = precision.mp
    expected = 1 / (3 * mp.log(3) * mp.log(mp.log(3)) ** 2)

    value = term(c2_spec, 3, precision)

    assert abs(value - expected) < mp.mpf("1e-55") * expected
    assert format_fixed(value, 1) == "34.3"


def test_term_first_d_term(d2_spec: SeriesSpec, precision: PrecisionContext) -> None:
    """k = 2 of the alpha = 2 D-series is 1/(2 log^2 2), about 1.0407."""
    value = term(d2_spec, 2, precision)

    assert format_fixed(value, 4) == "1.0407"


@pytest.mark.parametrize("k", [3, 16, 1000, 123457])
def test_term_defining_identity(k: int, c2_spec: SeriesSpec, precision: PrecisionContext) -> None:
    """term(k) k log k (log log k)^2 = 1."""
    mp = precision.mp

    product = term(c2_spec, k, precision) * k * mp.log(k) * mp.log(mp.log(k)) ** 2

    assert abs(product - 1) < mp.mpf("1e-55")


def test_term_below_start_index(c2_spec: SeriesSpec, precision: PrecisionContext) -> None:
    """k = 2 is outside the C-family."""
    with pytest.raises(DomainError):
        term(c2_spec, 2, precision)


@pytest.mark.parametrize("family", list(SeriesFamily))
def test_terms_positive_and_decreasing(family: SeriesFamily, precision: PrecisionContext) -> None:
    """Terms decrease strictly from the second index on, sampled up to 10^6."""
    spec = SeriesSpec(family=family, alpha=2)
    start = spec.start_index
    indices = [*range(start, start + 10), 100, 1000, 10**4, 10**5, 10**6]

    values = [term(spec, k, precision) for k in indices]

    assert all(v > 0 for v in values)
    assert all(a > b for a, b in zip(values[1:], values[2:], strict=False))


def test_partial_sum_single_term(c2_spec: SeriesSpec, precision: PrecisionContext) -> None:
    """N = 3 sums just the first term."""
    assert partial_sum(c2_spec, 3, precision) == term(c2_spec, 3, precision)


@pytest.mark.parametrize("n", [3, 10, 57])
def test_partial_sum_recurrence(n: int, c2_spec: SeriesSpec, precision: PrecisionContext) -> None:
    """S(N) + term(N+1) = S(N+1) exactly."""
    assert partial_sum(c2_spec, n, precision) + term(c2_spec, n + 1, precision) == partial_sum(
        c2_spec, n + 1, precision
    )


def test_partial_sum_below_start_index(d2_spec: SeriesSpec, precision: PrecisionContext) -> None:
    """N = 1 is outside the D-family."""
    with pytest.raises(DomainError):
        partial_sum(d2_spec, 1, precision)


def test_head_matches_uncorrected_table_row(
    c2_spec: SeriesSpec, precision: PrecisionContext
) -> None:
    """S(20) + I(20) is the zero-correction value 38.406819893505282."""
    head = partial_sum(c2_spec, 20, precision) + tail_integral(c2_spec, 20, precision)

    assert format_fixed(head, 15) == "38.406819893505282"


def test_tail_integral_c2(c2_spec: SeriesSpec, precision: PrecisionContext) -> None:
    """1 / log log 20.5, about 0.9046."""
    mp = precision.mp
    expected = 1 / mp.log(mp.log(mp.mpf("20.5")))

    value = tail_integral(c2_spec, 20, precision)

    assert abs(value - expected) < mp.mpf("1e-55")
    assert 0.9046 < value < 0.9047


def test_tail_integral_c3_is_half_square(
    c2_spec: SeriesSpec, precision: PrecisionContext
) -> None:
    """alpha = 3 gives half the square of the alpha = 2 tail."""
    c3_spec = SeriesSpec(family=SeriesFamily.C, alpha=3)

    c2_tail = tail_integral(c2_spec, 20, precision)
    c3_tail = tail_integral(c3_spec, 20, precision)

    assert abs(c3_tail - c2_tail**2 / 2) < precision.real("1e-55")


def test_tail_integral_d2(d2_spec: SeriesSpec, precision: PrecisionContext) -> None:
    """1 / log 20.5, about 0.3310."""
    assert 0.3310 < tail_integral(d2_spec, 20, precision) < 0.3311


def test_tail_integral_rejects_alpha_below_two(precision: PrecisionContext) -> None:
    """An unvalidated spec with alpha = 1 has no closed-form tail."""
    spec = SeriesSpec.model_construct(family=SeriesFamily.C, alpha=1)

    with pytest.raises(DomainError):
        tail_integral(spec, 20, precision)


def test_tail_integral_vanishes(c2_spec: SeriesSpec, precision: PrecisionContext) -> None:
    """The tail shrinks as N grows."""
    assert tail_integral(c2_spec, 10**6, precision) < tail_integral(c2_spec, 10**3, precision)


def test_tail_integral_between(c2_spec: SeriesSpec, precision: PrecisionContext) -> None:
    """Finite tail from N + 1/2 to M + 1/2."""
    between = tail_integral_between(c2_spec, 20, 500, precision)

    assert between == tail_integral(c2_spec, 20, precision) - tail_integral(c2_spec, 500, precision)
    assert tail_integral_between(c2_spec, 20, 20, precision) == 0
    with pytest.raises(DomainError):
        tail_integral_between(c2_spec, 20, 19, precision)


@pytest.mark.parametrize("family", list(SeriesFamily))
@pytest.mark.parametrize("alpha", [2, 3, 4])
@pytest.mark.parametrize("n", [20, 80])
def test_tail_integral_matches_quadrature(
    family: SeriesFamily, alpha: int, n: int, precision: PrecisionContext
) -> None:
    """Closed form and tanh-sinh quadrature agree to 1e-20 relative."""
    spec = SeriesSpec(family=family, alpha=alpha)

    closed = tail_integral(spec, n, precision)
    numeric = tail_integral_quadrature(spec, n, precision)

    assert abs(numeric - closed) < precision.real("1e-20") * closed


def test_derivative_is_cached_differentiation(c2_spec: SeriesSpec) -> None:
    """derivative() is the memoized derivative of the base expression."""
    assert derivative(c2_spec, 4) == differentiate(c2_spec.base_expression, 4)
    assert derivative(c2_spec, 4) is derivative(c2_spec, 4)


def test_estimate_direct_terms_unit_accuracy(precision: PrecisionContext) -> None:
    """delta = 1 needs about e^e = 15.15 terms."""
    mp = precision.mp

    log10_n = estimate_direct_terms(1, precision)

    assert abs(mp.power(10, log10_n) - mp.exp(mp.e)) < mp.mpf("1e-50")
    assert format_fixed(log10_n, 2) == "1.18"
    assert render_direct_terms(log10_n) == "1.5×10^1"


def test_estimate_direct_terms_tenth(precision: PrecisionContext) -> None:
    """delta = 0.1 needs roughly 9×10^9565 terms."""
    log10_n = estimate_direct_terms("0.1", precision)

    assert 9565 < log10_n < 9566
    assert render_direct_terms(log10_n) == "9.4×10^9565"


def test_estimate_direct_terms_large_delta(precision: PrecisionContext) -> None:
    """As delta grows, N tends to e."""
    mp = precision.mp

    log10_n = estimate_direct_terms(10**6, precision)

    assert abs(mp.power(10, log10_n) - mp.e) < mp.mpf("1e-5")


@pytest.mark.parametrize("delta", [0, -1, "-0.5"])
def test_estimate_direct_terms_rejects_non_positive(
    delta: int | str, precision: PrecisionContext
) -> None:
    """delta must be positive."""
    with pytest.raises(DomainError):
        estimate_direct_terms(delta, precision)


def test_render_direct_terms_carry(precision: PrecisionContext) -> None:
    """A mantissa rounding up to 10 moves into the exponent."""
    assert render_direct_terms(precision.real("2.9999")) == "1.0×10^3"
