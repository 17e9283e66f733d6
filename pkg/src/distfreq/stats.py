"""Exact statistics of distance frequency arrays.

The distance frequency array of an n-node connected graph is the
length-(n-1) integer sequence whose j-th entry counts unordered node pairs
at shortest-path distance j. Averages, medians, Gini indices, and the tail
bounds are computed in exact rational arithmetic; floating point appears
only in the large-n asymptotic helper.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

# Stable identifiers for the structural rules every distance frequency
# array of a connected graph satisfies. validate_alpha returns the
# violated subset; the verification harness and the CLI reuse the same
# strings.
ALPHA_TOTAL = "alpha.total"  # entries sum to n(n-1)/2
ALPHA_MIN_EDGES = "alpha.min_edges"  # first entry (edge count) >= n-1
ALPHA_DIAMETER_COUNT = "alpha.diameter_count"  # last entry is 0 or 1
ALPHA_ZERO_TAIL = "alpha.zero_tail"  # a zero entry forces all later entries to zero
ALPHA_SECOND_BOUND = "alpha.second_bound"  # second entry <= (n-1)(n-2)/2
BETA_TAIL_BOUNDS = "beta.tail_bounds"  # every tail sum within its beta bound

VALIDATION_IDS = (
    ALPHA_TOTAL,
    ALPHA_MIN_EDGES,
    ALPHA_DIAMETER_COUNT,
    ALPHA_ZERO_TAIL,
    ALPHA_SECOND_BOUND,
)


def node_count(counts: Sequence[int]) -> int:
    """Node count implied by an array's length (length + 1)."""
    if len(counts) < 1:
        raise ValueError("frequency array must have at least one entry")
    return len(counts) + 1


def pair_count(n: int) -> int:
    """Number of unordered node pairs, n(n-1)/2."""
    return n * (n - 1) // 2


def _check_entries(counts: Sequence[int]) -> None:
    for value in counts:
        if not isinstance(value, int) or value < 0:
            raise ValueError(f"entries must be non-negative integers, got {value!r}")


def validate_alpha(counts: Sequence[int]) -> list[str]:
    """Identifiers of the structural rules the array violates (empty when valid).

    The rules are necessary for being the distance frequency array of a
    connected graph; passing all of them does not guarantee that such a
    graph exists.
    """
    n = node_count(counts)
    _check_entries(counts)
    violated = []
    if sum(counts) != pair_count(n):
        violated.append(ALPHA_TOTAL)
    if counts[0] < n - 1:
        violated.append(ALPHA_MIN_EDGES)
    if counts[-1] > 1:
        violated.append(ALPHA_DIAMETER_COUNT)
    zero_seen = False
    for value in counts:
        if value == 0:
            zero_seen = True
        elif zero_seen:
            violated.append(ALPHA_ZERO_TAIL)
            break
    if n >= 3 and counts[1] > (n - 1) * (n - 2) // 2:
        violated.append(ALPHA_SECOND_BOUND)
    return violated


def _require_valid_total(counts: Sequence[int]) -> int:
    n = node_count(counts)
    _check_entries(counts)
    total = sum(counts)
    if total != pair_count(n):
        raise ValueError(
            f"entries must sum to n(n-1)/2 = {pair_count(n)} for n={n}, got {total}"
        )
    return n


def average_distance(counts: Sequence[int]) -> Fraction:
    """Mean distance over all n(n-1)/2 unordered pairs, exact."""
    n = _require_valid_total(counts)
    weighted = sum(d * c for d, c in enumerate(counts, start=1))
    return Fraction(2 * weighted, n * (n - 1))


def _order_statistic(counts: Sequence[int], k: int) -> int:
    cumulative = 0
    for distance, count in enumerate(counts, start=1):
        cumulative += count
        if cumulative >= k:
            return distance
    raise ValueError(f"order statistic {k} beyond total count {cumulative}")


def median_distance(counts: Sequence[int]) -> Fraction:
    """Median of the distance multiset (counts[j-1] copies of j), exact.

    For an even pair count the median is the mean of the two middle order
    statistics, so the result is always an integer or a half-integer.
    """
    n = _require_valid_total(counts)
    m = pair_count(n)
    if m % 2 == 1:
        return Fraction(_order_statistic(counts, (m + 1) // 2))
    lower = _order_statistic(counts, m // 2)
    upper = _order_statistic(counts, m // 2 + 1)
    return Fraction(lower + upper, 2)


def gini(counts: Sequence[int]) -> Fraction:
    """Gini concentration index of the distance distribution, exact.

    Equals (n - 2 * average) / (n - 1); the geometric definition in the
    majorization module yields the same value for any valid array.
    """
    n = _require_valid_total(counts)
    return (n - 2 * average_distance(counts)) / (n - 1)


def average_from_gini(gini_value: Fraction, n: int) -> Fraction:
    """Invert the Gini formula back to the average distance: n/2 - g(n-1)/2."""
    return Fraction(n, 2) - gini_value * Fraction(n - 1, 2)


def beta_bounds(n: int) -> tuple[int, ...]:
    """Tail-sum caps: the i-th tail of any realizable array is at most (n-i+1)(n-i)/2."""
    if n < 2:
        raise ValueError(f"need at least 2 nodes, got {n}")
    return tuple((n - i + 1) * (n - i) // 2 for i in range(1, n))


def check_beta(counts: Sequence[int]) -> bool:
    """True iff each entry is at most its tail sum and each tail sum is within its cap."""
    n = _require_valid_total(counts)
    bounds = beta_bounds(n)
    tail = 0
    for i in range(n - 2, -1, -1):
        tail += counts[i]
        if counts[i] > tail or tail > bounds[i]:
            return False
    return True


def chain_alpha(n: int) -> tuple[int, ...]:
    """Distance frequencies of the n-node path: (n-1, n-2, ..., 1)."""
    if n < 2:
        raise ValueError(f"need at least 2 nodes, got {n}")
    return tuple(range(n - 1, 0, -1))


def complete_alpha(n: int) -> tuple[int, ...]:
    """Distance frequencies of the complete graph: every pair at distance 1."""
    if n < 2:
        raise ValueError(f"need at least 2 nodes, got {n}")
    return (pair_count(n),) + (0,) * (n - 2)


def chain_average(n: int) -> Fraction:
    """Average distance in the n-node path, (n+1)/3 exactly."""
    if n < 2:
        raise ValueError(f"need at least 2 nodes, got {n}")
    return Fraction(n + 1, 3)


def chain_median(n: int) -> Fraction:
    """Median distance in the n-node path, exact."""
    return median_distance(chain_alpha(n))


def _floor_chain_median_root(n: int) -> int:
    # floor of x where (n-x)(n-x+1)/2 = n(n-1)/4, i.e.
    # x = ((2n+1) - sqrt(2n^2-2n+1))/2, using only integer arithmetic.
    disc = 2 * n * n - 2 * n + 1
    root = math.isqrt(disc)
    if root * root == disc:
        return (2 * n + 1 - root) // 2
    a = 2 * n + 1 - root
    return a // 2 - 1 if a % 2 == 0 else a // 2


def chain_median_bracket(n: int) -> tuple[Fraction, Fraction]:
    """The two values the path median can take: (floor(x) - 1/2, floor(x)).

    x is the real solution of (n-x)(n-x+1)/2 = n(n-1)/4; its floor is
    computed exactly, so the bracket is correct for any n.
    """
    if n < 2:
        raise ValueError(f"need at least 2 nodes, got {n}")
    k = _floor_chain_median_root(n)
    return (Fraction(2 * k - 1, 2), Fraction(k))


def chain_median_asymptotic(n: int) -> Fraction:
    """Large-n path median approximation n(1 - sqrt(2)/2).

    Evaluated in double precision (about 16 significant digits) and
    returned as the exact fraction of that evaluation.
    """
    if n < 2:
        raise ValueError(f"need at least 2 nodes, got {n}")
    return Fraction(n) * (1 - Fraction(math.sqrt(2)) / 2)


def parse_alpha(text: str) -> tuple[int, ...]:
    """Parse a comma-separated frequency array like "6,7,6,2,0,0"."""
    parts = [p.strip() for p in text.split(",")]
    if not parts or any(not p for p in parts):
        raise ValueError(f"malformed frequency array: {text!r}")
    try:
        counts = tuple(int(p) for p in parts)
    except ValueError:
        raise ValueError(f"malformed frequency array: {text!r}") from None
    if any(c < 0 for c in counts):
        raise ValueError(f"entries must be non-negative: {text!r}")
    return counts


def format_alpha(counts: Sequence[int]) -> str:
    """Comma-separated rendering, e.g. "6,7,6,2,0,0"."""
    return ",".join(str(c) for c in counts)


def format_rational(value: Fraction) -> str:
    """Lowest-terms "numerator/denominator" rendering."""
    return f"{value.numerator}/{value.denominator}"


def decimal_str(value: Fraction, places: int = 6) -> str:
    """Fixed-point decimal rendering with round-half-even, exact in integers."""
    sign = "-" if value < 0 else ""
    scale = 10**places
    q, r = divmod(abs(value.numerator) * scale, value.denominator)
    if 2 * r > value.denominator or (2 * r == value.denominator and q % 2 == 1):
        q += 1
    whole, frac = divmod(q, scale)
    return f"{sign}{whole}.{frac:0{places}d}"


@dataclass(frozen=True)
class StatsReport:
    """Exact summary statistics of one distance frequency array."""

    n: int
    alpha: tuple[int, ...]
    average: Fraction
    median: Fraction
    gini: Fraction
    beta: tuple[int, ...]


def stats_report(counts: Sequence[int]) -> StatsReport:
    """Bundle average, median, Gini, and tail bounds for a valid array."""
    n = _require_valid_total(counts)
    return StatsReport(
        n=n,
        alpha=tuple(counts),
        average=average_distance(counts),
        median=median_distance(counts),
        gini=gini(counts),
        beta=beta_bounds(n),
    )
