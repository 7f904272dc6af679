"""Curvature-corrected (Romberg) and centered Euler-Maclaurin acceleration engines.

Both engines sum the terms up to N directly, replace the rest by the closed-form
integral from N + 1/2 and correct the bias between that integral and the
Riemann sum:

- romberg: subtract [4^s (2s+1)!]^-1 sum_{k=N+1}^{k_hat} f^(2s)(k) for s = 1..s_max
- em: add beta(s) / 2^(2s-1) f^(2s-1)(N + 1/2) for s = 1..s_max

Correction terms are accumulated separately from the head (partial sum plus
tail integral) and combined last.
"""

from collections.abc import Sequence
from fractions import Fraction

from app.core.config import get_settings
from app.core.exceptions import ConfigurationError, ConvergenceError
from app.core.logging import get_logger
from app.features.engines.engines_models import EngineConfig, EvaluationReport
from app.features.series.series_models import SeriesSpec
from app.features.series.series_service import (
    derivative,
    partial_sum,
    tail_integral,
    tail_integral_between,
)
from app.shared.atoms.atoms import evaluate_many
from app.shared.exactnum.exactnum import curvature_coefficient, em_coefficient
from app.shared.hpreal.hpreal_models import PrecisionContext, Real

logger = get_logger(__name__)

# evaluate_constant needs this many working digits beyond the requested ones.
CONSTANT_DIGIT_MARGIN = 10


def _check_switch_index(spec: SeriesSpec, cfg: EngineConfig) -> None:
    if cfg.switch_index < spec.start_index:
        raise ConfigurationError(
            f"N = {cfg.switch_index} is below the start index {spec.start_index} of {spec.label}"
        )


def _head(spec: SeriesSpec, cfg: EngineConfig) -> Real:
    """Partial sum up to N plus the tail integral from N + 1/2."""
    ctx = cfg.precision
    head = partial_sum(spec, cfg.switch_index, ctx)
    if cfg.upper_index is None:
        return head + tail_integral(spec, cfg.switch_index, ctx)
    return head + tail_integral_between(spec, cfg.switch_index, cfg.upper_index, ctx)


def _half_integer(n: int, ctx: PrecisionContext) -> Real:
    return ctx.real(Fraction(2 * n + 1, 2))


def romberg_sweep(
    spec: SeriesSpec, cfg: EngineConfig, k_hats: Sequence[int]
) -> list[EvaluationReport]:
    """Run the Romberg engine once, reporting at several k_hat checkpoints.

    The derivative sums are accumulated in increasing k; each checkpoint reads
    the running sums, so every report equals a separate romberg_evaluate call
    with that k_hat.

    Args:
        spec: Series specification.
        cfg: Engine configuration; its own k_hat is ignored.
        k_hats: Truncation indices of the derivative sums, each greater than N.

    Returns:
        One report per entry of ``k_hats``, in the given order.

    Raises:
        ConfigurationError: If N is below the start index or a k_hat is out of range.
    """
    _check_switch_index(spec, cfg)
    for k_hat in k_hats:
        if k_hat <= cfg.switch_index:
            raise ConfigurationError(f"k_hat = {k_hat} must exceed N = {cfg.switch_index}")
        if cfg.upper_index is not None and k_hat > cfg.upper_index:
            raise ConfigurationError(f"k_hat = {k_hat} exceeds upper_index = {cfg.upper_index}")

    ctx = cfg.precision
    mp = ctx.mp
    orders = range(1, cfg.s_max + 1)
    expressions = [derivative(spec, 2 * s) for s in orders]
    weights = [ctx.real(curvature_coefficient(s)) for s in orders]

    logger.info(
        "engine.romberg.evaluate_started",
        series=spec.label,
        switch_index=cfg.switch_index,
        s_max=cfg.s_max,
        k_hats=list(k_hats),
    )
    head = _head(spec, cfg)
    sums = [mp.zero for _ in orders]
    reports: dict[int, EvaluationReport] = {}
    k = cfg.switch_index + 1
    for k_hat in sorted(set(k_hats)):
        if expressions:
            while k <= k_hat:
                for i, value in enumerate(evaluate_many(expressions, k, ctx)):
                    sums[i] += value
                k += 1
        corrections = [weight * total for weight, total in zip(weights, sums, strict=True)]
        reduction = mp.zero
        for correction in corrections:
            reduction += correction
        reports[k_hat] = EvaluationReport(
            engine="romberg",
            spec=spec,
            config=cfg.model_copy(update={"k_hat": k_hat}),
            value=head - reduction,
            correction_magnitudes=corrections,
        )
    logger.info("engine.romberg.evaluate_completed", series=spec.label, reports=len(reports))
    return [reports[k_hat] for k_hat in k_hats]


def romberg_evaluate(spec: SeriesSpec, cfg: EngineConfig) -> EvaluationReport:
    """Curvature-corrected summation truncated at k_hat.

    value = partial_sum(N) + I_N - sum_{s=1}^{s_max} [4^s (2s+1)!]^-1 sum_{k=N+1}^{k_hat} f^(2s)(k)

    Args:
        spec: Series specification.
        cfg: Engine configuration; k_hat is required unless upper_index is set,
            in which case it defaults to upper_index.

    Returns:
        Report with the estimate and the cumulative correction of every order.

    Raises:
        ConfigurationError: If k_hat is missing or N is below the start index.
    """
    k_hat = cfg.k_hat if cfg.k_hat is not None else cfg.upper_index
    if k_hat is None:
        raise ConfigurationError("the romberg engine needs k_hat")
    return romberg_sweep(spec, cfg, [k_hat])[0]


def euler_maclaurin_evaluate(spec: SeriesSpec, cfg: EngineConfig) -> EvaluationReport:
    """Centered Euler-Maclaurin summation anchored at N + 1/2.

    value = partial_sum(N) + I_N + sum_{s=1}^{s_max} beta(s) / 2^(2s-1) f^(2s-1)(N + 1/2)

    With upper_index M set, the tail integral stops at M + 1/2 and each
    correction becomes beta(s) / 2^(2s-1) [f^(2s-1)(N + 1/2) - f^(2s-1)(M + 1/2)].

    Args:
        spec: Series specification.
        cfg: Engine configuration.

    Returns:
        Report with the estimate and each order's correction term.

    Raises:
        ConfigurationError: If N is below the start index.
    """
    _check_switch_index(spec, cfg)
    ctx = cfg.precision
    mp = ctx.mp
    orders = range(1, cfg.s_max + 1)
    expressions = [derivative(spec, 2 * s - 1) for s in orders]
    weights = [ctx.real(em_coefficient(s)) for s in orders]

    logger.debug(
        "engine.em.evaluate_started",
        series=spec.label,
        switch_index=cfg.switch_index,
        s_max=cfg.s_max,
    )
    head = _head(spec, cfg)
    derivatives = evaluate_many(expressions, _half_integer(cfg.switch_index, ctx), ctx)
    if cfg.upper_index is not None:
        at_upper = evaluate_many(expressions, _half_integer(cfg.upper_index, ctx), ctx)
        derivatives = [lo - hi for lo, hi in zip(derivatives, at_upper, strict=True)]

    corrections = [weight * value for weight, value in zip(weights, derivatives, strict=True)]
    total = mp.zero
    for correction in corrections:
        total += correction
    return EvaluationReport(
        engine="em",
        spec=spec,
        config=cfg,
        value=head + total,
        correction_magnitudes=corrections,
    )


def direct_evaluate(spec: SeriesSpec, cfg: EngineConfig) -> EvaluationReport:
    """Direct partial sum up to N, the uncorrected baseline.

    Raises:
        ConfigurationError: If s_max is not zero or N is below the start index.
    """
    _check_switch_index(spec, cfg)
    if cfg.s_max != 0:
        raise ConfigurationError("the direct engine takes no corrections (s_max must be 0)")
    return EvaluationReport(
        engine="direct",
        spec=spec,
        config=cfg,
        value=partial_sum(spec, cfg.switch_index, cfg.precision),
    )


def evaluate_constant_report(
    spec: SeriesSpec,
    target_digits: int,
    precision: PrecisionContext | None = None,
    switch_indices: Sequence[int] | None = None,
    s_maxes: Sequence[int] | None = None,
) -> EvaluationReport:
    """Evaluate the series limit to ``target_digits`` significant digits.

    Runs the Euler-Maclaurin engine over the escalation schedule (every s_max for
    each N, N ascending) until two successive configurations agree to
    target_digits + 1 significant digits.

    Args:
        spec: Series specification.
        target_digits: Significant digits required.
        precision: Working precision; defaults to the configured one.
        switch_indices: Escalation values of N; defaults to the configured schedule.
        s_maxes: Escalation values of s_max; defaults to the configured schedule.

    Returns:
        The report of the configuration that confirmed convergence.

    Raises:
        ConfigurationError: If target_digits exceeds the working precision budget.
        ConvergenceError: If the schedule is exhausted without agreement.
    """
    settings = get_settings()
    ctx = precision if precision is not None else settings.precision()
    switch_indices = switch_indices or settings.escalation_switch_indices
    s_maxes = s_maxes or settings.escalation_s_max
    if target_digits > ctx.working_digits - CONSTANT_DIGIT_MARGIN:
        raise ConfigurationError(
            f"{target_digits} digits requested but only {ctx.working_digits} working digits "
            f"available (margin {CONSTANT_DIGIT_MARGIN})"
        )

    mp = ctx.mp
    tolerance = mp.mpf(10) ** -(target_digits + 1)
    logger.info("engine.constant.evaluate_started", series=spec.label, target_digits=target_digits)

    history: list[Real] = []
    for n in switch_indices:
        if n < spec.start_index:
            continue
        for s_max in s_maxes:
            cfg = EngineConfig(switch_index=n, s_max=s_max, precision=ctx)
            report = euler_maclaurin_evaluate(spec, cfg)
            value = report.value
            logger.debug(
                "engine.constant.escalation_step",
                series=spec.label,
                switch_index=n,
                s_max=s_max,
                value=mp.nstr(value, target_digits + 3),
            )
            if history and abs(value - history[-1]) <= tolerance * abs(value):
                logger.info(
                    "engine.constant.evaluate_completed",
                    series=spec.label,
                    switch_index=n,
                    s_max=s_max,
                )
                return report
            history.append(value)

    logger.error("engine.constant.evaluate_failed", series=spec.label, target_digits=target_digits)
    raise ConvergenceError(
        f"{spec.label} did not stabilize to {target_digits} digits",
        previous=history[-2] if len(history) > 1 else None,
        last=history[-1] if history else None,
    )


def evaluate_constant(
    spec: SeriesSpec,
    target_digits: int,
    precision: PrecisionContext | None = None,
    switch_indices: Sequence[int] | None = None,
    s_maxes: Sequence[int] | None = None,
) -> Real:
    """Value of :func:`evaluate_constant_report`."""
    return evaluate_constant_report(
        spec, target_digits, precision, switch_indices, s_maxes
    ).value
