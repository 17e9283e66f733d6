"""Extended majorization order and extended Lorenz curves.

Sequences are compared as given, without sorting: x majorizes y when every
prefix sum of x is at least the matching prefix sum of y and the totals
agree. The extended Lorenz curve joins the scaled partial sums by line
segments; it is increasing but, unlike the classical curve, not
necessarily concave. All curve arithmetic is exact rational.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

SANDWICH_UPPER = "sandwich.upper"  # complete-graph array majorizes the array
SANDWICH_LOWER = "sandwich.lower"  # the array majorizes the path array


def _check_sequence(x: Sequence[int], name: str) -> None:
    if len(x) < 1:
        raise ValueError(f"{name} must have at least one entry")
    for value in x:
        if not isinstance(value, int) or value < 0:
            raise ValueError(f"{name} entries must be non-negative integers, got {value!r}")


def _check_pair(x: Sequence[int], y: Sequence[int]) -> None:
    _check_sequence(x, "x")
    _check_sequence(y, "y")
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")


def extended_majorizes(x: Sequence[int], y: Sequence[int]) -> bool:
    """True iff every proper prefix sum of x dominates y's and the totals are equal."""
    _check_pair(x, y)
    last = len(x) - 1
    sum_x = sum_y = 0
    for i, (a, b) in enumerate(zip(x, y)):
        sum_x += a
        sum_y += b
        if i < last and sum_x < sum_y:
            return False
    return sum_x == sum_y


def first_prefix_violation(x: Sequence[int], y: Sequence[int]) -> int | None:
    """1-based index of the first proper prefix where x falls below y, or None.

    Totals are not compared; this locates why prefix dominance fails.
    """
    _check_pair(x, y)
    sum_x = sum_y = 0
    for i in range(len(x) - 1):
        sum_x += x[i]
        sum_y += y[i]
        if sum_x < sum_y:
            return i + 1
    return None


@dataclass(frozen=True)
class LorenzCurve:
    """Breakpoints of an extended Lorenz curve, exact rationals from (0,0) to (1,1)."""

    points: tuple[tuple[Fraction, Fraction], ...]

    @property
    def n_points(self) -> int:
        return len(self.points)

    def ordinates(self) -> tuple[Fraction, ...]:
        return tuple(y for _, y in self.points)


def lorenz_points(x: Sequence[int]) -> LorenzCurve:
    """Extended Lorenz curve of a sequence: points (i/k, s_i/total) for i = 0..k.

    s_i is the i-th partial sum with s_0 = 0 and k = len(x). Raises for an
    all-zero sequence, whose curve is undefined.
    """
    _check_sequence(x, "x")
    total = sum(x)
    if total == 0:
        raise ValueError("cannot build a Lorenz curve for an all-zero sequence")
    k = len(x)
    points = [(Fraction(0), Fraction(0))]
    partial = 0
    for i, value in enumerate(x, start=1):
        partial += value
        points.append((Fraction(i, k), Fraction(partial, total)))
    return LorenzCurve(tuple(points))


def curve_dominates(x: Sequence[int], y: Sequence[int]) -> bool:
    """True iff the curve of x lies on or above the curve of y everywhere.

    Requires equal lengths and equal totals; the curves then share their
    breakpoint abscissas, so breakpoint dominance is equivalent to
    dominance of the full piecewise-linear curves. Coincides with
    extended_majorizes under the same hypotheses.
    """
    _check_pair(x, y)
    if sum(x) != sum(y):
        raise ValueError(f"total mismatch: {sum(x)} vs {sum(y)}")
    xs = lorenz_points(x).ordinates()
    ys = lorenz_points(y).ordinates()
    return all(a >= b for a, b in zip(xs, ys))


def gini_geometric(x: Sequence[int]) -> Fraction:
    """Twice the trapezoidal area under the extended Lorenz curve, minus one.

    Equals the Gini index of a valid distance frequency array; for general
    sequences whose curve dips below the diagonal the value may be negative.
    """
    ys = lorenz_points(x).ordinates()
    k = len(ys) - 1
    twice_area = sum(ys[i - 1] + ys[i] for i in range(1, len(ys)))
    return twice_area / k - 1
