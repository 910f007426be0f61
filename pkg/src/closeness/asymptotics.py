"""Closed-form sandwiches for path and ladder closeness, and their pi limit.

``n * closeness`` tends to pi for both families.  The exact value comes
from summing the per-vertex closed forms: as a Fraction up to
``exact_limit``, and with ``math.fsum`` beyond it (the lcm of the
denominators grows too fast for exact sums at n ~ 10**6).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

EXACT_LIMIT = 1000
# containment slack, relative to the compared magnitude
SANDWICH_RTOL = 1e-12


@dataclass(frozen=True)
class AsymptoticSandwich:
    family: str
    n: int
    lower: float
    upper: float
    exact: Fraction | None  # None when n > exact_limit
    exact_float: float

    @property
    def pi_gap(self) -> float:
        return abs(self.n * self.exact_float - math.pi)

    @property
    def contained(self) -> bool:
        slack = SANDWICH_RTOL * max(abs(self.exact_float), abs(self.upper))
        return self.lower <= self.exact_float + slack and self.exact_float <= self.upper + slack


def path_lower(n: int) -> float:
    root = math.sqrt((n - 1) / (n + 1))
    return 4 / n * root * math.atan(root)


def path_upper(n: int) -> float:
    return math.pi / n * math.sqrt((n - 1) / (n + 1)) + (n - 1) / (n * (n // 2) * ((n + 1) // 2))


def ladder_lower(n: int) -> float:
    root = math.sqrt(n * n + 2 * n - 1)
    return (4 * n - 2) / (n * root) * math.atan((n - 1) / root) + 2 / n**3 * (2 * n - 1) ** 2 / (n * n + 2 * n - 1)


def ladder_upper(n: int) -> float:
    return math.pi / n * math.sqrt((2 * n - 1) / (2 * n + 5)) + 2 / (n * (2 * n + 5))


def _path_terms(n: int):
    """(numerator, denominator) of each vertex closeness of P_n."""
    return [(4 * (n - 1), (2 * k - n + 1) ** 2 + n * n - 1) for k in range(n)]


def _ladder_rail_terms(n: int):
    """Vertex closeness along one rail of L_n; the other rail is identical."""
    return [(4 * n - 2, (2 * k - n + 1) ** 2 + n * n + 2 * n - 1) for k in range(n)]


def _mean(terms, count: int, exact: bool) -> tuple[Fraction | None, float]:
    if exact:
        common = math.lcm(*{den for _, den in terms})
        total = Fraction(sum(num * (common // den) for num, den in terms), common * count)
        return total, float(total)
    return None, math.fsum(num / den for num, den in terms) / count


def asymptotic_sandwich_path(n: int, exact_limit: int = EXACT_LIMIT) -> AsymptoticSandwich:
    if n < 2:
        raise ValueError("path sandwich needs n >= 2")
    exact, value = _mean(_path_terms(n), n, n <= exact_limit)
    return AsymptoticSandwich("path", n, path_lower(n), path_upper(n), exact, value)


def asymptotic_sandwich_ladder(n: int, exact_limit: int = EXACT_LIMIT) -> AsymptoticSandwich:
    if n < 2:
        raise ValueError("ladder sandwich needs n >= 2")
    # averaging 2n vertices = averaging one rail of n
    exact, value = _mean(_ladder_rail_terms(n), n, n <= exact_limit)
    return AsymptoticSandwich("ladder", n, ladder_lower(n), ladder_upper(n), exact, value)


SANDWICHES = {"path": asymptotic_sandwich_path, "ladder": asymptotic_sandwich_ladder}


def asymptotic_run(family: str, sizes, exact_limit: int = EXACT_LIMIT) -> list[AsymptoticSandwich]:
    if family not in SANDWICHES:
        raise ValueError(f"family must be 'path' or 'ladder', got {family!r}")
    return [SANDWICHES[family](n, exact_limit) for n in sizes]
