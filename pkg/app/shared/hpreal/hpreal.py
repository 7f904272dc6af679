"""Elementary functions, conversions and fixed-point rendering at context precision."""

from fractions import Fraction

from app.core.exceptions import DomainError
from app.shared.hpreal.hpreal_models import PrecisionContext, Real


def ln(x: Real | int | Fraction, ctx: PrecisionContext) -> Real:
    """Natural logarithm at context precision.

    Args:
        x: Positive argument.
        ctx: Precision context.

    Returns:
        log(x).

    Raises:
        DomainError: If x <= 0.
    """
    value = ctx.real(x)
    if value <= 0:
        raise DomainError(f"ln needs a positive argument, got {ctx.mp.nstr(value, 10)}")
    return ctx.mp.log(value)


def exp(x: Real | int | Fraction, ctx: PrecisionContext) -> Real:
    """Exponential at context precision."""
    return ctx.mp.exp(ctx.real(x))


def rational_to_real(q: Fraction, ctx: PrecisionContext) -> Real:
    """Convert an exact rational, rounded to nearest at context precision."""
    return ctx.real(q)


def format_fixed(x: Real, decimals: int) -> str:
    """Render x in fixed-point notation with exactly ``decimals`` decimals.

    Rounds half to even from the full-precision value.

    Args:
        x: Value to render.
        decimals: Number of digits after the decimal point (>= 0).

    Returns:
        The decimal string, e.g. "38.406768092821786".
    """
    mp = x.context
    scaled = int(mp.nint(x * mp.mpf(10) ** decimals))
    sign = "-" if scaled < 0 else ""
    digits = str(abs(scaled))
    if decimals == 0:
        return sign + digits
    digits = digits.rjust(decimals + 1, "0")
    return f"{sign}{digits[:-decimals]}.{digits[-decimals:]}"


def format_significant(x: Real, digits: int) -> str:
    """Render x in fixed-point notation with ``digits`` significant digits.

    Args:
        x: Value to render.
        digits: Number of significant digits (>= 1).

    Returns:
        The decimal string, e.g. "38.40676809282179" for 16 digits.
    """
    mp = x.context
    if x == 0:
        return format_fixed(x, max(digits - 1, 0))
    exponent = int(mp.floor(mp.log10(abs(x))))
    decimals = max(digits - 1 - exponent, 0)
    rendered = format_fixed(x, decimals)
    # Rounding may carry into a new leading digit (9.99... -> 10.0...).
    if decimals > 0 and len(rendered.lstrip("-").replace(".", "").lstrip("0")) > digits:
        rendered = format_fixed(x, decimals - 1)
    return rendered
