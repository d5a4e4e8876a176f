"""Closed-form characteristic polynomials, radii, and comparison gaps.

These are the printed formulas of the theorem, transcribed once and
cross-checked elsewhere three ways: against quotient matrices built from
actual graphs (acceptance suite), against exact rational-arithmetic
identities (:mod:`alphaspec.exactpoly`), and against dense eigensolves.

Naming used throughout:

* *family radius* -- largest eigenvalue of the three-block join family
  (clique of size s joined to a clique plus an independent set),
* *half radius* -- the same for the two-block family where the joined
  clique takes half of ``n - k`` (the ``s = (n-k)/2`` endpoint),
* *gap* -- the linear-in-x remainder that separates the cubic from the
  quadratic characteristic polynomial,
* *margin* -- the quantity whose sign settles whether the half radius
  clears the degree threshold that makes the two-family comparison valid.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from ._rootfind import bisect_increasing
from .errors import NumericError, ParameterError


def scenario_violations(n, t, k, alpha) -> list[str]:
    """Everything wrong with a prospective (n, t, k, alpha), as messages."""
    out: list[str] = []
    if not (isinstance(n, int) and isinstance(t, int) and isinstance(k, int)):
        out.append(
            f"n, t, k must be integers, got n={n!r}, t={t!r}, k={k!r}")
        return out
    if k < 2:
        out.append(f"k must be at least 2, got {k}")
    if n < k + 2:
        out.append(f"n must be at least k + 2, got n={n}, k={k}")
    if (n - k) % 2 != 0:
        out.append(f"n - k must be even, got n={n}, k={k}")
    if t < 1:
        out.append(f"t must be at least 1, got {t}")
    elif not out and t > (n - k) // 2:
        out.append(
            f"t must not exceed (n - k)/2 = {(n - k) // 2}, got t={t}")
    try:
        bad = not (0.0 <= float(alpha) <= 1.0) or float(alpha) != float(alpha)
    except (TypeError, ValueError):
        bad = True
    if bad:
        out.append(f"alpha must lie in [0, 1], got {alpha!r}")
    return out


@dataclass(frozen=True)
class ScenarioParams:
    """Inputs of the classification: order n, connectivity floor t,
    matching slack k (so the matching number is capped at (n-k)/2),
    and the diagonal weight alpha."""

    n: int
    t: int
    k: int
    alpha: float

    def __post_init__(self) -> None:
        problems = self.violations()
        if problems:
            raise ParameterError("; ".join(problems))

    def violations(self) -> list[str]:
        return scenario_violations(self.n, self.t, self.k, self.alpha)

    @property
    def matching_bound(self) -> int:
        return (self.n - self.k) // 2

    @property
    def at_endpoint(self) -> bool:
        """True when t = (n-k)/2, where both candidate families coincide."""
        return self.t == self.matching_bound


def family_charpoly(x: float, n: int, s: int, k: int, alpha: float) -> float:
    """Cubic whose largest root is the three-block family radius."""
    a = alpha
    c2 = k - n + s + 1 - a * (n + s)
    c1 = (n * s * a * a + (n * n - k * n - 2 * s) * a
          + k - n + 2 * s - k * s - s * s)
    c0 = ((-k * k * s + 2 * k * n * s - 4 * k * s * s + k * s - n * n * s
           + 2 * n * s * s - n * s - 3 * s ** 3 + 3 * s * s) * a * a
          + (3 * n * s - 3 * k * s + 7 * k * s * s + 2 * k * k * s
             - 2 * n * s * s - 6 * s * s + 5 * s ** 3 - 2 * k * n * s) * a
          + (k * s - n * s - 3 * k * s * s - k * k * s + n * s * s
             + 2 * s * s - 2 * s ** 3 + k * n * s))
    return ((x + c2) * x + c1) * x + c0


def half_charpoly(x: float, n: int, k: int, alpha: float) -> float:
    """Quadratic whose largest root is the half radius."""
    a = alpha
    c1 = -((n - k) / 2.0 - 1.0 + a * n)
    c0 = (a * (-k * k / 4.0 - k * n / 2.0 + k / 2.0 + 3.0 * n * n / 4.0
               - n / 2.0)
          + (k * k - n * n) / 4.0)
    return (x + c1) * x + c0


def half_radius_radicand(n: int, k: int, alpha: float) -> float:
    """Quantity under the square root in the half-radius closed form."""
    a = alpha
    base = n - k - 2.0 + 2.0 * a * n
    return (base * base + 4.0 * (n * n - k * k)
            - 4.0 * a * (3.0 * n + k - 2.0) * (n - k))


def half_radius_radical(n: int, k: int, alpha: float) -> float:
    """Square root of the radicand; ParameterError if it is negative."""
    rad = half_radius_radicand(n, k, alpha)
    if rad < 0.0:
        raise ParameterError(
            f"negative radicand {rad} at n={n}, k={k}, alpha={alpha}; "
            "the closed form only applies on the valid parameter range")
    return math.sqrt(rad)


def half_radius_closed(n: int, k: int, alpha: float) -> float:
    """Half radius in closed form: linear part plus a quarter radical."""
    return (n - k - 2.0 + 2.0 * alpha * n) / 4.0 + half_radius_radical(
        n, k, alpha) / 4.0


def family_radius(n: int, s: int, k: int, alpha: float) -> float:
    """Largest root of the family cubic by certified bracket + bisection.

    The family contains a clique on n + 1 - s - k vertices whose radius is
    n - s - k at every alpha, so the largest root is strictly right of
    n - s - k; it is also below the largest quotient row sum, hence below
    n.  Both bracket ends are certified at runtime before bisecting.
    """
    if not (isinstance(n, int) and isinstance(s, int) and isinstance(k, int)):
        raise ParameterError(
            f"n, s, k must be integers, got {n!r}, {s!r}, {k!r}")
    if k < 2 or s < 1 or (n - k) % 2 != 0 or s > (n - k) // 2:
        raise ParameterError(
            f"need k >= 2, 1 <= s <= (n - k)/2 with n - k even; "
            f"got n={n}, s={s}, k={k}")
    a = float(alpha)
    if not (0.0 <= a <= 1.0) or a != a:
        raise ParameterError(f"alpha must lie in [0, 1], got {alpha!r}")

    def p(x: float) -> float:
        return family_charpoly(x, n, s, k, a)

    lo = float(n - s - k)
    hi = float(n)
    if p(lo) > 0.0 or p(hi) < 0.0:
        raise NumericError(
            f"family radius bracket failed at n={n}, s={s}, k={k}, "
            f"alpha={a}: p({lo})={p(lo)}, p({hi})={p(hi)}",
            best_estimate=lo)
    return bisect_increasing(p, lo, hi)


def charpoly_gap(x: float, n: int, s: int, k: int, alpha: float) -> float:
    """Linear-in-x gap between the cubic and the quadratic charpolys.

    Satisfies  cubic - (x - (n - k - 2(1-alpha)s)/2) * quadratic
    = ((n - 2s - k)/8) * gap,  so its sign at the half radius orders the
    two family radii.
    """
    a = alpha
    return ((4.0 * k + 4.0 * s - 4.0 - 2.0 * a * (n + k - 2.0)) * x
            - (12.0 * a - 8.0) * (1.0 - a) * s * s
            - ((2.0 * n - 10.0 * k + 12.0) * a * a
               + (18.0 * k + 2.0 * n - 24.0) * a - 8.0 * k + 8.0) * s
            - (n - k) * ((1.0 - a) * (n + k) - 2.0 * a * (n - 1.0)))


def gap_at_half_radius(n: int, t: int, k: int, alpha: float) -> float:
    """The gap evaluated at the half radius, radical folded in.

    Negative means the s = t family wins, positive means the half family
    wins, zero is a tie -- provided the margin below is nonnegative.
    """
    a = alpha
    r = half_radius_radical(n, k, a)
    coeff = k + t - 1.0 - (a / 2.0) * (n + k) + a
    poly = ((12.0 * t * t + (10.0 * k - 2.0 * n - 12.0) * t
             + 2.0 * n - k * n - n * n) * a * a
            + ((24.0 - 18.0 * k) * t - 20.0 * t * t - k * k / 2.0 + 2.0 * k
               + 5.0 * n * n / 2.0 - 2.0 * n - 2.0) * a
            + k * k - n * n + (k + t - 1.0) * (n + 8.0 * t - k - 2.0))
    return coeff * r + poly


def half_radius_margin(n: int, t: int, k: int, alpha: float) -> float:
    """Sign-equivalent to (half radius) - (n - (2 - alpha) t - k).

    Nonnegative exactly when the half radius clears the threshold under
    which the sign of the gap is conclusive; equals the radicand minus the
    squared threshold offset, divided by four.
    """
    a = alpha
    return ((a - 1.0) * n * n
            + (4.0 * t * a * a + (2.0 - 14.0 * t - 2.0 * k) * a
               + 4.0 * k + 12.0 * t - 4.0) * n
            - 4.0 * t * t * a * a
            + (k * k + 6.0 * k * t - 2.0 * k + 16.0 * t * t - 4.0 * t) * a
            - 3.0 * k * k - 12.0 * k * t + 4.0 * k - 16.0 * t * t + 8.0 * t)


def alpha_zero_discriminant(n: int, t: int, k: int) -> int:
    """Exact integer deciding the adjacency (alpha = 0) comparison.

    Positive exactly when the s = t family radius exceeds the half radius
    at alpha = 0, zero on ties; computed in integer arithmetic so the
    boundary cases are exact.
    """
    if not (isinstance(n, int) and isinstance(t, int) and isinstance(k, int)):
        raise ParameterError(
            f"n, t, k must be integers, got {n!r}, {t!r}, {k!r}")
    q = n * n - k * k
    c = k + t - 1
    return (q * q - 2 * q * c * (n + k + 10 * t - 4)
            + 16 * t * c * c * (n + 4 * t - k - 2))
