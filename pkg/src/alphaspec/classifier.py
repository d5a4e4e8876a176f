"""Which family attains the maximum radius: the decision procedure.

Among t-connected graphs of order n with matching number at most (n-k)/2,
the maximum alpha radius is attained by one of two join families: the
three-block family at s = t, or the two-block family where the joined
clique takes (n-k)/2 vertices.  Their comparison reduces to the sign of
the gap evaluated at the half radius (``delta1``), valid whenever the
threshold margin (``delta2``) is nonnegative; at alpha = 0 the whole
decision collapses to exact integer arithmetic.

The one region the theorem does not cover -- positive gap with negative
margin -- has never shown up on any parameter scan, but the classifier
still handles it honestly: it reports ``UndeterminedByTheorem`` and
attaches the direction a direct radius comparison gives.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .closedforms import (
    ScenarioParams,
    alpha_zero_discriminant,
    family_radius,
    gap_at_half_radius,
    half_radius_closed,
    half_radius_margin,
    scenario_violations,
)
from .errors import ParameterError
from .graphs import FamilySpec

EXTREMAL_T = "ExtremalT"
HALF = "Half"
TIE = "Tie"
UNDETERMINED = "UndeterminedByTheorem"

VERDICTS = frozenset({EXTREMAL_T, HALF, TIE, UNDETERMINED})

# tolerance on the decision quantities, scaled by n^2 because that is the
# magnitude of the polynomial parts entering delta1/delta2
DECISION_EPS = 1e-9
RHO_COMPARE_EPS = 1e-9


def validate(n, t, k, alpha) -> list[str]:
    """Parameter problems as human-readable messages; empty when valid."""
    return scenario_violations(n, t, k, alpha)


@dataclass(frozen=True)
class ClassificationResult:
    """Verdict plus the numbers that drove it."""

    verdict: str
    delta1: float
    delta2: float
    rho_t: float
    rho_half: float
    family_t: FamilySpec
    note: str
    resolved: str | None = None

    def to_json(self) -> dict:
        out = {
            "verdict": self.verdict,
            "delta1": self.delta1,
            "delta2": self.delta2,
            "rho_t": self.rho_t,
            "rho_half": self.rho_half,
            "note": self.note,
        }
        if self.resolved is not None:
            out["resolved"] = self.resolved
        return out


def classify_alpha_zero(n: int, t: int, k: int) -> str:
    """Exact adjacency-case verdict in integer arithmetic only.

    The printed rule "sign of the discriminant decides" holds when the
    co-factor A = n^2 - k^2 - (k+t-1)(n+8t-k-2) is positive; with A <= 0
    the gap is (k+t-1) * sqrt(radicand) - A > 0 outright, so the half
    family side applies regardless of the discriminant's sign (which can
    be positive there -- both conjugate factors negative).  Half and Tie
    verdicts additionally need the alpha = 0 margin to be nonnegative.
    """
    problems = scenario_violations(n, t, k, 0.0)
    if problems:
        raise ParameterError("; ".join(problems))
    if t == (n - k) // 2:
        return TIE
    a_co = n * n - k * k - (k + t - 1) * (n + 8 * t - k - 2)
    disc = alpha_zero_discriminant(n, t, k)
    if a_co > 0 and disc > 0:
        return EXTREMAL_T
    direction = TIE if (a_co > 0 and disc == 0) else HALF
    margin0 = (-n * n + (4 * k + 12 * t - 4) * n
               - 3 * k * k - 12 * k * t + 4 * k - 16 * t * t + 8 * t)
    if margin0 < 0:
        return UNDETERMINED
    return direction


def _direct_comparison(rho_t: float, rho_half: float) -> str:
    if rho_t > rho_half + RHO_COMPARE_EPS:
        return EXTREMAL_T
    if rho_half > rho_t + RHO_COMPARE_EPS:
        return HALF
    return TIE


def classify(params: ScenarioParams) -> ClassificationResult:
    """Decide which family attains the maximum radius for these parameters."""
    n, t, k = params.n, params.t, params.k
    alpha = float(params.alpha)
    eps = DECISION_EPS * n * n
    rho_half = half_radius_closed(n, k, alpha)
    rho_t = family_radius(n, t, k, alpha)
    delta1 = gap_at_half_radius(n, t, k, alpha)
    delta2 = half_radius_margin(n, t, k, alpha)
    family_t = FamilySpec(n, t, k)

    if params.at_endpoint:
        return ClassificationResult(
            TIE, delta1, delta2, rho_t, rho_half, family_t,
            note="families coincide at the endpoint t = (n - k)/2")

    if alpha == 0.0:
        verdict = classify_alpha_zero(n, t, k)
        if verdict != UNDETERMINED:
            return ClassificationResult(
                verdict, delta1, delta2, rho_t, rho_half, family_t,
                note="exact integer arithmetic at alpha = 0")
        return ClassificationResult(
            UNDETERMINED, delta1, delta2, rho_t, rho_half, family_t,
            note=("theorem silent at alpha = 0: nonnegative gap with "
                  "negative margin; resolved by direct radius comparison"),
            resolved=_direct_comparison(rho_t, rho_half))

    if delta1 < -eps:
        return ClassificationResult(
            EXTREMAL_T, delta1, delta2, rho_t, rho_half, family_t,
            note="negative gap at the half radius")
    if delta2 >= -eps:
        if delta1 > eps:
            return ClassificationResult(
                HALF, delta1, delta2, rho_t, rho_half, family_t,
                note="positive gap with nonnegative margin")
        return ClassificationResult(
            TIE, delta1, delta2, rho_t, rho_half, family_t,
            note="gap within tolerance of zero with nonnegative margin")
    return ClassificationResult(
        UNDETERMINED, delta1, delta2, rho_t, rho_half, family_t,
        note=("theorem silent: nonnegative gap with negative margin; "
              "resolved by direct radius comparison"),
        resolved=_direct_comparison(rho_t, rho_half))


class ThresholdResult(NamedTuple):
    """Radius ceiling certifying a perfect matching, and its attaining family."""

    rho: float
    family: FamilySpec
    is_half: bool


def perfect_matching_threshold(n: int, alpha: float) -> ThresholdResult:
    """Largest radius among connected graphs of even order n with no
    perfect matching: exceeding it forces one.

    Printed only for alpha = 0 and alpha = 1/2 (t = 1, k = 2 scenario);
    other weights raise ParameterError rather than extrapolate.
    """
    if not isinstance(n, int) or n < 4 or n % 2 != 0:
        raise ParameterError(
            f"perfect-matching threshold needs even n >= 4, got {n!r}")
    a = float(alpha)
    if a not in (0.0, 0.5):
        raise ParameterError(
            f"threshold is established for alpha = 0 and 1/2 only, "
            f"got {alpha!r}")
    result = classify(ScenarioParams(n, 1, 2, a))
    if result.verdict == EXTREMAL_T:
        return ThresholdResult(result.rho_t, FamilySpec(n, 1, 2), False)
    # Half or Tie: the two-block family attains (ties give equal radii)
    return ThresholdResult(
        result.rho_half, FamilySpec(n, (n - 2) // 2, 2), True)
