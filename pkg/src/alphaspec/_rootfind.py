"""Deterministic root finding shared by the closed-form and quotient code.

Everything funnels through fixed-step bisection so that repeated runs agree
to the bit.  The cubic helper exploits that every polynomial fed to it is
the characteristic polynomial of a matrix similar to a symmetric one: all
roots are real, so the largest lies at or right of the rightmost critical
point, giving a certified bracket.
"""
from __future__ import annotations

import math

from .errors import NumericError

BISECT_ITERATIONS = 200
BISECT_TOL = 1e-12


def bisect_increasing(fn, lo: float, hi: float) -> float:
    """Root of ``fn`` on [lo, hi] assuming fn(lo) <= 0 <= fn(hi).

    Fixed 200-step midpoint bisection, stopping early once the bracket is
    narrower than 1e-12.  Callers certify the bracket before calling; the
    routine itself never raises.
    """
    lo = float(lo)
    hi = float(hi)
    for _ in range(BISECT_ITERATIONS):
        if hi - lo < BISECT_TOL:
            break
        mid = 0.5 * (lo + hi)
        if fn(mid) <= 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def largest_real_quadratic_root(c1: float, c0: float) -> float:
    """Largest real root of x^2 + c1 x + c0, or NumericError if complex."""
    disc = c1 * c1 - 4.0 * c0
    if disc < 0.0:
        if disc < -1e-9 * max(1.0, c1 * c1):
            raise NumericError(
                "quadratic has no real roots", best_estimate=-0.5 * c1)
        disc = 0.0
    return 0.5 * (-c1 + math.sqrt(disc))


def largest_real_cubic_root(c2: float, c1: float, c0: float) -> float:
    """Largest real root of p(x) = x^3 + c2 x^2 + c1 x + c0.

    The largest root of a real-rooted cubic sits at or right of the
    rightmost zero of p', where p is increasing, so [that point, Cauchy
    bound] brackets it.  p' having no real zero means p is strictly
    increasing with a single real root, bracketed by the Cauchy bound on
    both sides.  A clearly positive value at the rightmost critical point
    would mean a conjugate pair on the right, which the callers' matrices
    rule out; it is reported as NumericError rather than silently mended.
    """

    def p(x: float) -> float:
        return ((x + c2) * x + c1) * x + c0

    scale = 1.0 + abs(c2) + abs(c1) + abs(c0)
    cauchy = 1.0 + max(abs(c2), abs(c1), abs(c0))
    crit_disc = c2 * c2 - 3.0 * c1
    if crit_disc < 0.0:
        return bisect_increasing(p, -cauchy, cauchy)
    lo = (-c2 + math.sqrt(crit_disc)) / 3.0
    if p(lo) > 1e-9 * scale:
        raise NumericError(
            "no real root at or beyond the rightmost critical point",
            best_estimate=lo)
    return bisect_increasing(p, lo, max(cauchy, lo + 1.0))
