"""Exact rational arithmetic: Bernoulli numbers and Euler-Maclaurin coefficients.

All values are ``fractions.Fraction``, which keeps numerator and denominator in
lowest terms with a positive denominator.
"""

from collections.abc import Iterator
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from app.core.exceptions import DomainError

# Compositions grow as 2^(s-1); the enumeration is an oracle for small s only.
MAX_COMPOSITION_ORDER = 20


@lru_cache(maxsize=None)
def bernoulli_numbers(m: int) -> tuple[Fraction, ...]:
    """Return B_0..B_m from the recurrence sum_{j=0}^{m} C(m+1, j) B_j = 0.

    Uses the B_1 = -1/2 convention; odd B_j vanish for j >= 3.

    Args:
        m: Highest index, m >= 0.

    Returns:
        Tuple of m + 1 exact Bernoulli numbers.

    Raises:
        DomainError: If m is negative.
    """
    if m < 0:
        raise DomainError(f"Bernoulli index must be non-negative, got {m}")
    if m == 0:
        return (Fraction(1),)

    previous = bernoulli_numbers(m - 1)
    if m >= 3 and m % 2 == 1:
        return (*previous, Fraction(0))

    acc = sum((comb(m + 1, j) * b for j, b in enumerate(previous)), Fraction(0))
    return (*previous, -acc / (m + 1))


def bernoulli_even(m: int) -> Fraction:
    """Return the Bernoulli number B_m for even m >= 0.

    Args:
        m: Even, non-negative index.

    Returns:
        B_m as an exact fraction (B_0 = 1, B_2 = 1/6, B_4 = -1/30, ...).

    Raises:
        DomainError: If m is odd or negative.
    """
    if m < 0 or m % 2 != 0:
        raise DomainError(f"Only even non-negative Bernoulli indices are exposed, got {m}")
    # Build the memo bottom-up so the recursion never runs deep.
    for j in range(0, m, 64):
        bernoulli_numbers(j)
    return bernoulli_numbers(m)[m]


def beta(s: int) -> Fraction:
    """Closed form beta(s) = (2^(2s-1) - 1) B_2s / (2s)!.

    Args:
        s: Correction order, s >= 1.

    Returns:
        beta(s) exactly; 1/12, -7/720, 31/30240 for s = 1, 2, 3.

    Raises:
        DomainError: If s < 1.
    """
    if s < 1:
        raise DomainError(f"beta(s) needs s >= 1, got {s}")
    return (2 ** (2 * s - 1) - 1) * bernoulli_even(2 * s) / factorial(2 * s)


def compositions(s: int) -> Iterator[tuple[int, ...]]:
    """Yield every ordered partition of s into positive parts.

    Args:
        s: Positive integer to decompose.

    Yields:
        Tuples of positive parts summing to s, largest first part first.
    """
    if s == 0:
        yield ()
        return
    for first in range(s, 0, -1):
        for rest in compositions(s - first):
            yield (first, *rest)


def curvature_coefficient(s: int) -> Fraction:
    """Return 1/[4^s (2s+1)!], the weight of the 2s-th derivative in a unit slab."""
    if s < 1:
        raise DomainError(f"curvature order must be >= 1, got {s}")
    return Fraction(1, 4**s * factorial(2 * s + 1))


def beta_via_compositions(s: int) -> Fraction:
    """Evaluate beta(s) as 2^(2s-1) times a sum over the compositions of s.

    Each composition contributes the product of -1/[4^j (2j+1)!] over its parts j.
    The result equals beta(s) in magnitude with the opposite sign; the engines
    always use :func:`beta`.

    Args:
        s: Correction order, 1 <= s <= MAX_COMPOSITION_ORDER.

    Returns:
        The composition-sum value as an exact fraction.

    Raises:
        DomainError: If s is outside the enumerable range.
    """
    if not 1 <= s <= MAX_COMPOSITION_ORDER:
        raise DomainError(f"composition enumeration supports 1 <= s <= {MAX_COMPOSITION_ORDER}")

    total = Fraction(0)
    for parts in compositions(s):
        product = Fraction(1)
        for j in parts:
            product *= -curvature_coefficient(j)
        total += product
    return 2 ** (2 * s - 1) * total


def em_coefficient(s: int) -> Fraction:
    """Return beta(s) / 2^(2s-1), the weight of the (2s-1)-th derivative at N + 1/2."""
    return beta(s) / 2 ** (2 * s - 1)
