"""Digamma-family special functions, self-contained.

Only the small slice of special-function machinery the entropy formulas
need: the Euler-Mascheroni constant, the digamma function psi(x) for
positive real arguments, and the combination psi(x) - ln(x) evaluated
without cancellation.

Algorithm: arguments below a shift threshold are raised with the
recurrence psi(x) = psi(x+1) - 1/x, then the asymptotic expansion

    psi(x) ~ ln(x) - 1/(2x) - sum_{n>=1} B_{2n} / (2n x^{2n})

is applied, truncated after the x^(-14) term. With the threshold at 6
the truncation error of the series is below 1e-14, so the recurrence
steps dominate the error budget and absolute accuracy stays near 1e-13
across the supported range.
"""

from __future__ import annotations

import math

#: Euler-Mascheroni constant, lim_{n->inf} (H_n - ln n), to double precision.
EULER_GAMMA = 0.5772156649015329

_SHIFT_THRESHOLD = 6.0

# Coefficients B_{2n}/(2n) for n = 1..7, i.e. the x^{-2} .. x^{-14} terms
# of the asymptotic expansion of psi(x) - ln(x) + 1/(2x).
_ASYMPTOTIC = (
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
)


def _require_positive(x: float, name: str) -> float:
    x = float(x)
    if not math.isfinite(x) or x <= 0.0:
        raise ValueError(f"{name} must be positive and finite, got {x!r}")
    return x


def _series_tail(x: float) -> float:
    """psi(x) - ln(x) for x >= the shift threshold, via the asymptotic series.

    Never forms psi(x) and ln(x) separately, so the returned difference
    carries full relative accuracy even when both are large.
    """
    z = 1.0 / (x * x)
    s = 0.0
    for coeff in reversed(_ASYMPTOTIC):
        s = (s + coeff) * z
    return -0.5 / x - s


def euler_gamma() -> float:
    """Return the Euler-Mascheroni constant gamma = 0.57721566490153286..."""
    return EULER_GAMMA


def digamma(x: float) -> float:
    """Digamma function psi(x) = d/dx ln Gamma(x) for x > 0.

    Absolute error is at or below 1e-12 for x in [1e-3, 1e12].

    Raises ValueError for nonpositive, NaN, or infinite arguments.
    """
    x = _require_positive(x, "x")
    acc = 0.0
    while x < _SHIFT_THRESHOLD:
        acc -= 1.0 / x
        x += 1.0
    return acc + math.log(x) + _series_tail(x)


def digamma_minus_log(x: float) -> float:
    """psi(x) - ln(x), computed without catastrophic cancellation.

    For x at or above the shift threshold the value comes straight from
    the asymptotic tail -1/(2x) - 1/(12x^2) + ..., so the tiny difference
    is never formed by subtracting two near-equal numbers; relative error
    of the returned difference stays below 1e-10 however large x gets.
    Below the threshold the difference is order one and the recurrence
    path is used with the log folded in analytically.
    """
    x = _require_positive(x, "x")
    if x >= _SHIFT_THRESHOLD:
        return _series_tail(x)
    acc = 0.0
    y = x
    while y < _SHIFT_THRESHOLD:
        acc -= 1.0 / y
        y += 1.0
    # psi(x) - ln x = psi(y) - sum 1/(x+k) - ln x, and psi(y) = ln y + tail(y)
    return acc + math.log(y / x) + _series_tail(y)
