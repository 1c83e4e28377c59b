"""Radius bounds for the separable ball around the maximally mixed state and
inscribed radii of projective tensor products of Euclidean unit balls."""
from __future__ import annotations

import math
from dataclasses import dataclass

RATIO_LIMIT = math.sqrt(34 / 27)
LOWER_CONSTANT = math.sqrt(54 / 17)


class UnknownRadiusError(ValueError):
    pass


def upper_bound(m: int) -> float:
    """Distance from the maximally mixed state of the constructed boundary state."""
    if m < 1:
        raise ValueError("m must be at least 1")
    return 2 * 6 ** (-m / 2) * math.sqrt(1 / (1 + _tail(m)))


def _tail(m: int) -> float:
    return 3.0 ** (-m + 1) if m % 2 == 0 else 3.0 ** (-m)


def lower_bound(m: int) -> float:
    if m < 1:
        raise ValueError("m must be at least 1")
    return LOWER_CONSTANT * 6 ** (-m / 2)


@dataclass(frozen=True)
class BoundsReport:
    m: int
    r_lower: float
    r_upper: float
    ratio: float
    asymptote: float = RATIO_LIMIT


def bounds_report(m: int) -> BoundsReport:
    lo, up = lower_bound(m), upper_bound(m)
    # closed form of up/lo; the quotient of the two floats can overshoot the limit by an ulp
    return BoundsReport(m, lo, up, RATIO_LIMIT / math.sqrt(1 + _tail(m)))


def ball_radius(n: int, m: int) -> float:
    """Exact radius of the largest ball inside the projective tensor product of
    m unit balls in R^n, for the cases where it is known."""
    if m < 1:
        raise ValueError("m must be at least 1")
    if n in (1, 2, 4, 8):
        return n ** (-(m - 1) / 2)
    if (n, m) == (3, 3):
        return 1 / math.sqrt(7)
    if (n, m) == (3, 4):
        return 1 / math.sqrt(21)
    raise UnknownRadiusError(f"inscribed radius for n={n}, m={m} is not determined")


def ball_radius_lower(n: int, m: int) -> tuple[float, str]:
    """n^{-(m-1)/2}, a valid lower bound for every n; labelled "exact" where it
    is known to be attained."""
    if n < 1 or m < 1:
        raise ValueError("n and m must be positive")
    status = "exact" if n in (1, 2, 4, 8) or m == 1 else "lower bound"
    return n ** (-(m - 1) / 2), status
