"""Exact differentiation and high-precision evaluation of atom expressions."""

from collections import defaultdict
from collections.abc import Sequence
from fractions import Fraction
from functools import lru_cache

from app.core.exceptions import DomainError
from app.shared.atoms.atoms_models import Atom, AtomExpression
from app.shared.hpreal.hpreal import ln
from app.shared.hpreal.hpreal_models import PrecisionContext, Real


def differentiate_atom(atom: Atom) -> AtomExpression:
    """First derivative of a single atom.

    d/dx g(n,l,L) = -n g(n+1,l,L) - l g(n+1,l+1,L) - L g(n+1,l+1,L+1)

    Args:
        atom: The atom g(n, l, L).

    Returns:
        The derivative, without terms whose coefficient vanishes.
    """
    n, l_, big_l = atom.power, atom.log_power, atom.loglog_power
    terms: dict[Atom, Fraction] = defaultdict(Fraction)
    terms[Atom(n + 1, l_, big_l)] -= n
    terms[Atom(n + 1, l_ + 1, big_l)] -= l_
    terms[Atom(n + 1, l_ + 1, big_l + 1)] -= big_l
    return AtomExpression.from_mapping(terms)


@lru_cache(maxsize=512)
def differentiate(expression: AtomExpression, order: int) -> AtomExpression:
    """Exact ``order``-fold derivative of an atom expression.

    Args:
        expression: Expression to differentiate.
        order: Number of derivatives (>= 0); zero returns the expression unchanged.

    Returns:
        The derivative in canonical form.

    Raises:
        DomainError: If order is negative.
    """
    if order < 0:
        raise DomainError(f"derivative order must be non-negative, got {order}")
    if order == 0:
        return expression

    previous = differentiate(expression, order - 1)
    terms: dict[Atom, Fraction] = defaultdict(Fraction)
    for atom, coefficient in previous:
        for child, child_coefficient in differentiate_atom(atom):
            terms[child] += coefficient * child_coefficient
    return AtomExpression.from_mapping(terms)


@lru_cache(maxsize=1024)
def _real_terms(
    expression: AtomExpression, ctx: PrecisionContext
) -> tuple[tuple[int, int, int, Real], ...]:
    return tuple(
        (atom.power, atom.log_power, atom.loglog_power, ctx.real(coefficient))
        for atom, coefficient in expression
    )


def _powers(base: Real, count: int, one: Real) -> list[Real]:
    powers = [one]
    for _ in range(count):
        powers.append(powers[-1] * base)
    return powers


def evaluate_many(
    expressions: Sequence[AtomExpression], x: Real | int | Fraction, ctx: PrecisionContext
) -> list[Real]:
    """Evaluate several expressions at one abscissa.

    The power tables of 1/x, 1/log x and 1/log log x are built once and shared.
    Factors with a zero exponent are never computed, so x <= e is legal when no
    atom carries a log log power.

    Args:
        expressions: Expressions to evaluate.
        x: Abscissa.
        ctx: Precision context.

    Returns:
        One value per expression, in order.

    Raises:
        DomainError: If a required log or log log factor is not positive.
    """
    mp = ctx.mp
    point = ctx.real(x)
    one = mp.one
    all_terms = [_real_terms(expression, ctx) for expression in expressions]
    max_power = max((t[0] for terms in all_terms for t in terms), default=0)
    max_log = max((t[1] for terms in all_terms for t in terms), default=0)
    max_loglog = max((t[2] for terms in all_terms for t in terms), default=0)

    if point <= 0:
        raise DomainError(f"atoms need x > 0, got {mp.nstr(point, 10)}")
    inv_x = _powers(one / point, max_power, one)

    inv_log = [one]
    inv_loglog = [one]
    if max_log or max_loglog:
        log_x = ln(point, ctx)
        if log_x <= 0:
            raise DomainError(f"log x must be positive, got x = {mp.nstr(point, 10)}")
        inv_log = _powers(one / log_x, max_log, one)
        if max_loglog:
            loglog_x = mp.log(log_x)
            if loglog_x <= 0:
                raise DomainError(f"log log x must be positive, got x = {mp.nstr(point, 10)}")
            inv_loglog = _powers(one / loglog_x, max_loglog, one)

    results: list[Real] = []
    for terms in all_terms:
        total = mp.zero
        for power, log_power, loglog_power, coefficient in terms:
            total += coefficient * inv_x[power] * inv_log[log_power] * inv_loglog[loglog_power]
        results.append(total)
    return results


def evaluate(
    expression: AtomExpression, x: Real | int | Fraction, ctx: PrecisionContext
) -> Real:
    """Evaluate sum coeff * x^-n (log x)^-l (log log x)^-L at context precision.

    Args:
        expression: Expression to evaluate.
        x: Abscissa (x > 1 if any log power, x > e if any log log power).
        ctx: Precision context.

    Returns:
        The value of the expression at x.
    """
    return evaluate_many((expression,), x, ctx)[0]


def render(expression: AtomExpression) -> str:
    """Render an expression in g-notation, e.g. "2g(3,1,2)+3g(3,2,2)-g(2,1,2)"."""
    if not len(expression):
        return "0"
    parts: list[str] = []
    for atom, coefficient in expression:
        magnitude = abs(coefficient)
        sign = "-" if coefficient < 0 else "+"
        prefix = "" if magnitude == 1 else str(magnitude)
        parts.append(f"{sign}{prefix}{atom}")
    rendered = "".join(parts)
    return rendered[1:] if rendered.startswith("+") else rendered
