"""Series terms, direct partial sums and closed-form tail integrals."""

from functools import lru_cache

from app.core.exceptions import DomainError
from app.core.logging import get_logger
from app.features.series.series_models import SeriesFamily, SeriesSpec
from app.shared.atoms.atoms import differentiate, evaluate
from app.shared.atoms.atoms_models import AtomExpression
from app.shared.hpreal.hpreal import exp, ln
from app.shared.hpreal.hpreal_models import PrecisionContext, Real

logger = get_logger(__name__)

# Doublings of N + 1/2 covered by the quadrature oracle before the closed-form remainder.
QUADRATURE_DOUBLINGS = 24


def _check_index(spec: SeriesSpec, k: int, name: str) -> None:
    if k < spec.start_index:
        raise DomainError(
            f"{name} = {k} is below the start index {spec.start_index} of {spec.label}"
        )


@lru_cache(maxsize=256)
def derivative(spec: SeriesSpec, order: int) -> AtomExpression:
    """Cached ``order``-th derivative of the series' term function."""
    return differentiate(spec.base_expression, order)


def term(spec: SeriesSpec, k: int, ctx: PrecisionContext) -> Real:
    """The series term at index k.

    Args:
        spec: Series specification.
        k: Summation index, k >= start_index.
        ctx: Precision context.

    Returns:
        1/[k log k (log log k)^alpha] or 1/[k (log k)^alpha].

    Raises:
        DomainError: If k is below the start index.
    """
    _check_index(spec, k, "k")
    return evaluate(spec.base_expression, k, ctx)


def partial_sum(spec: SeriesSpec, n: int, ctx: PrecisionContext) -> Real:
    """Sum the terms start_index..n directly, in increasing k.

    Args:
        spec: Series specification.
        n: Last index summed (inclusive).
        ctx: Precision context.

    Returns:
        The partial sum at context precision.

    Raises:
        DomainError: If n is below the start index.
    """
    _check_index(spec, n, "N")
    total = ctx.mp.zero
    for k in range(spec.start_index, n + 1):
        total += evaluate(spec.base_expression, k, ctx)
    return total


def _closed_form_tail(spec: SeriesSpec, lower: Real, ctx: PrecisionContext) -> Real:
    """Integral of the term function from ``lower`` to infinity."""
    inner = ln(lower, ctx)
    if spec.family is SeriesFamily.C:
        inner = ln(inner, ctx)
    return 1 / ((spec.alpha - 1) * inner ** (spec.alpha - 1))


def tail_integral(spec: SeriesSpec, n: int, ctx: PrecisionContext) -> Real:
    """Closed-form integral of the interpolating function from N + 1/2 to infinity.

    C-family: 1/{(alpha-1) [log log(N+1/2)]^(alpha-1)}.
    D-family: 1/{(alpha-1) [log(N+1/2)]^(alpha-1)}.

    Args:
        spec: Series specification.
        n: Switch-over index N.
        ctx: Precision context.

    Returns:
        The tail integral.

    Raises:
        DomainError: If N is below the start index or alpha < 2.
    """
    if spec.alpha < 2:
        raise DomainError(f"closed-form tail needs alpha >= 2, got {spec.alpha}")
    _check_index(spec, n, "N")
    return _closed_form_tail(spec, ctx.real(2 * n + 1) / 2, ctx)


def tail_integral_between(spec: SeriesSpec, n: int, upper: int, ctx: PrecisionContext) -> Real:
    """Integral of the interpolating function from N + 1/2 to M + 1/2."""
    if upper < n:
        raise DomainError(f"upper index {upper} is below N = {n}")
    return tail_integral(spec, n, ctx) - tail_integral(spec, upper, ctx)


def tail_integral_quadrature(spec: SeriesSpec, n: int, ctx: PrecisionContext) -> Real:
    """Numerical-quadrature oracle for :func:`tail_integral`.

    Integrates the term function with tanh-sinh quadrature over the intervals
    [a, 2a], [2a, 4a], ... up to X = a 2^QUADRATURE_DOUBLINGS, where a = N + 1/2,
    and adds the closed-form integral beyond X.

    Args:
        spec: Series specification.
        n: Switch-over index N.
        ctx: Precision context.

    Returns:
        The tail integral obtained by quadrature.
    """
    _check_index(spec, n, "N")
    mp = ctx.mp
    lower = ctx.real(2 * n + 1) / 2
    points = [lower * 2**j for j in range(QUADRATURE_DOUBLINGS + 1)]

    def integrand(x: Real) -> Real:
        return evaluate(spec.base_expression, x, ctx)

    body = mp.quad(integrand, points)
    remainder = _closed_form_tail(spec, points[-1], ctx)
    logger.debug(
        "series.quadrature.tail_completed",
        series=spec.label,
        switch_index=n,
        cut=mp.nstr(points[-1], 10),
    )
    return body + remainder


def estimate_direct_terms(delta: Real | int | str, ctx: PrecisionContext) -> Real:
    """log10 of the number of terms direct summation needs for absolute accuracy delta.

    N ~ exp(exp(1/delta)), so log10 N = exp(1/delta) / ln 10.

    Args:
        delta: Target absolute accuracy (> 0).
        ctx: Precision context.

    Returns:
        log10 N.

    Raises:
        DomainError: If delta <= 0.
    """
    value = ctx.real(delta)
    if value <= 0:
        raise DomainError("delta must be positive")
    return exp(1 / value, ctx) / ln(10, ctx)


def render_direct_terms(log10_n: Real, mantissa_digits: int = 2) -> str:
    """Render 10^log10_n as "m×10^e", e.g. "9.3×10^9565"."""
    mp = log10_n.context
    exponent = int(mp.floor(log10_n))
    mantissa = mp.power(10, log10_n - exponent)
    rendered = mp.nstr(mantissa, mantissa_digits)
    if rendered.startswith("10"):
        exponent += 1
        rendered = mp.nstr(mantissa / 10, mantissa_digits)
    return f"{rendered}×10^{exponent}"
