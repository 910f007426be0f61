"""Lower and upper bounds on mean closeness, evaluated against the exact value.

Each evaluator returns :class:`BoundRecord` objects.  Records tagged
``ASSERTED`` are expected to hold on every connected graph; ``AUDIT``
records are evaluated and reported but a failure is a finding, not an
error.  Bound identifiers are stable and appear in reports and CLI filters.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .graph import Graph, GraphInputError, StructuralSummary, bridges
from .metrics import CentralityProfile
from .spectral import SpectralData

LOWER, UPPER = "LOWER", "UPPER"
ASSERTED, AUDIT = "ASSERTED", "AUDIT"
FLOAT_SLACK = 1e-9
CEIL_NUDGE = 1e-9

TAG_SELF_COMPLEMENTARY = "self_complementary"
TAG_TWO_CONNECTED = "two_connected"
TAG_TREE = "tree"

BOUND_IDS = (
    "COR2.LB1", "COR2.LB2", "COR2.LB4", "COR2.LB5", "COR2.LB6", "COR2.LB7",
    "COR2.LB8", "COR2.LB9", "COR2.LB10", "LEM3.TRIVIAL_UB", "THM2.DUALITY",
    "THM3.RADIUS_DEGREE_UB", "THM3.RADIUS_UB", "THM4.SELFCOMP", "THM4.TREE",
    "THM4.TWOCONN",
)


@dataclass(frozen=True)
class BoundRecord:
    id: str
    kind: str
    status: str
    value: Fraction | float | None = None
    applicable: bool = True
    reason: str = ""
    holds: bool | None = None
    margin: Fraction | float | None = None
    tight: bool | None = None

    @property
    def violated(self) -> bool:
        return self.applicable and self.holds is False


def evaluate(bound_id: str, kind: str, status: str, value, closeness: Fraction, reason: str = "") -> BoundRecord:
    """Compare ``value`` with the exact closeness and fill holds/margin."""
    if isinstance(value, float):
        margin = float(closeness) - value if kind == LOWER else value - float(closeness)
        holds = margin >= -FLOAT_SLACK
        tight = abs(margin) <= FLOAT_SLACK
    else:
        value = Fraction(value)
        margin = closeness - value if kind == LOWER else value - closeness
        holds = margin >= 0
        tight = margin == 0
    return BoundRecord(bound_id, kind, status, value, True, reason, holds, margin, tight)


def inapplicable(bound_id: str, kind: str, status: str, reason: str) -> BoundRecord:
    return BoundRecord(bound_id, kind, status, applicable=False, reason=reason)


def duality_record(profile: CentralityProfile) -> BoundRecord:
    """Closeness is at least the reciprocal of the mean distance."""
    return evaluate("THM2.DUALITY", LOWER, ASSERTED, 1 / profile.mean_distance, profile.graph_closeness)


def lb2_h(n: int, diameter: int) -> int:
    return 6 - diameter if (n - diameter) % 2 else 2 * diameter


def corollary_lower_bounds(
    g: Graph,
    summary: StructuralSummary,
    profile: CentralityProfile,
    spectral: SpectralData | None = None,
    alpha: int | None = None,
) -> list[BoundRecord]:
    n, m = g.n, g.m
    cc = profile.graph_closeness
    delta, big_delta, diam = summary.min_degree, summary.max_degree, summary.diameter
    out = []

    inner = (
        Fraction((n - 1) * (n - big_delta) * (big_delta - 1), n * big_delta)
        - Fraction(2 * (m - n + 1), n * (n - 1))
        + 1
    )
    out.append(evaluate("COR2.LB1", LOWER, ASSERTED, 1 / inner, cc))

    den2 = 3 * n * (n - 4) * diam + 6 * n * (n + 2) - 12 * (m + 1) - diam**2 * (diam - 6) + lb2_h(n, diam)
    if den2 > 0:
        out.append(evaluate("COR2.LB2", LOWER, AUDIT, Fraction(6 * n * (n - 1), den2), cc))
    else:
        out.append(inapplicable("COR2.LB2", LOWER, AUDIT, f"non-positive denominator {den2}"))

    if spectral is None:
        for bid, status in (("COR2.LB4", ASSERTED), ("COR2.LB5", AUDIT), ("COR2.LB6", AUDIT)):
            out.append(inapplicable(bid, LOWER, status, "spectrum not computed"))
    else:
        b = spectral.b
        out.append(evaluate("COR2.LB4", LOWER, ASSERTED, Fraction(n * (n - 1), b * n * (n - 1) - 2 * (b - 1) * m), cc))
        theta2 = spectral.algebraic_connectivity
        x = (big_delta + theta2) / (4 * theta2) * math.log(n - 1)
        if abs(x - round(x)) <= CEIL_NUDGE:
            x = float(round(x))
        lb5 = (n - 1) / n / (math.ceil(x) + 0.5)
        out.append(evaluate("COR2.LB5", LOWER, AUDIT, lb5, cc))
        lb6 = (n - 1) * 2 * (m - n - 2) / spectral.reciprocal_sum
        out.append(evaluate("COR2.LB6", LOWER, AUDIT, lb6, cc, "vacuous: negative value" if lb6 < 0 else ""))

    out.append(evaluate("COR2.LB7", LOWER, ASSERTED, Fraction(3, n + 1), cc))
    lb8_den = ((n + 1) * n * (n - 1) - 2 * m) // (delta + 1)
    out.append(evaluate("COR2.LB8", LOWER, ASSERTED, Fraction(n * (n - 1), lb8_den), cc))
    if alpha is None:
        out.append(inapplicable("COR2.LB9", LOWER, ASSERTED, "independence number not computed"))
    else:
        out.append(evaluate("COR2.LB9", LOWER, ASSERTED, Fraction(1, alpha), cc))
    out.append(evaluate("COR2.LB10", LOWER, ASSERTED, Fraction(1, diam), cc))
    return out


def upper_bounds(summary: StructuralSummary, profile: CentralityProfile) -> list[BoundRecord]:
    n, r = profile.n, summary.radius
    cc = profile.graph_closeness
    out = [evaluate("LEM3.TRIVIAL_UB", UPPER, ASSERTED, Fraction(1), cc)]
    out.append(evaluate("THM3.RADIUS_UB", UPPER, ASSERTED, Fraction(n - 1, n - 1 + math.comb(r, 2)), cc))
    if r >= 3:
        den = 2 * n - 1 - summary.max_degree + Fraction(r * (r - 3), 2)
        out.append(evaluate("THM3.RADIUS_DEGREE_UB", UPPER, ASSERTED, (n - 1) / den, cc))
    else:
        out.append(inapplicable("THM3.RADIUS_DEGREE_UB", UPPER, ASSERTED, f"needs radius >= 3, radius is {r}"))
    return out


def detect_class_tags(g: Graph) -> set[str]:
    """Structural tags checkable directly; self-complementarity is never detected."""
    tags = set()
    if g.m == g.n - 1:
        tags.add(TAG_TREE)
    if g.n >= 3 and not bridges(g):
        tags.add(TAG_TWO_CONNECTED)
    return tags


def family_class_bounds(
    g: Graph, summary: StructuralSummary, profile: CentralityProfile, class_tags
) -> list[BoundRecord]:
    n = g.n
    cc = profile.graph_closeness
    tags = set(class_tags)
    out = []

    if TAG_SELF_COMPLEMENTARY in tags:
        if n % 4 not in (0, 1) or 4 * g.m != n * (n - 1):
            raise GraphInputError(
                f"self-complementary tag on a graph with n={n}, m={g.m}; needs n ≡ 0 or 1 (mod 4) and m = n(n-1)/4"
            )
        value = Fraction(8 * n - 8, 13 * n - 12) if n % 4 == 0 else Fraction(8 * n, 13 * n - 1)
        out.append(evaluate("THM4.SELFCOMP", LOWER, ASSERTED, value, cc))
    else:
        out.append(inapplicable("THM4.SELFCOMP", LOWER, ASSERTED, "not tagged self-complementary"))

    if TAG_TWO_CONNECTED in tags:
        if n < 3 or bridges(g):
            raise GraphInputError("two-connected tag on a graph that has a bridge")
        out.append(evaluate("THM4.TWOCONN", LOWER, ASSERTED, Fraction(n - 1, n * n // 4), cc))
    else:
        out.append(inapplicable("THM4.TWOCONN", LOWER, ASSERTED, "not 2-edge-connected"))

    if TAG_TREE in tags:
        if g.m != n - 1:
            raise GraphInputError(f"tree tag on a graph with m={g.m} != n-1={n - 1}")
        d = summary.max_degree
        out.append(evaluate("THM4.TREE", LOWER, AUDIT, Fraction(n * d, 2 * (n - d) * (d - 1) * (n - 1) + 2), cc))
    else:
        out.append(inapplicable("THM4.TREE", LOWER, AUDIT, "not a tree"))
    return out


def all_bounds(
    g: Graph,
    summary: StructuralSummary,
    profile: CentralityProfile,
    spectral: SpectralData | None = None,
    alpha: int | None = None,
    class_tags=(),
) -> list[BoundRecord]:
    records = [duality_record(profile)]
    records += corollary_lower_bounds(g, summary, profile, spectral, alpha)
    records += upper_bounds(summary, profile)
    records += family_class_bounds(g, summary, profile, class_tags)
    return sorted(records, key=lambda r: r.id)


# closed forms for the twelve families


@dataclass(frozen=True)
class ClosedFormResult:
    family_kind: str
    per_vertex: tuple[Fraction, ...]
    graph_closeness: Fraction | None  # None: no tidy closed form for this family
    discrepancy_note: str = ""
    corrected_per_vertex: tuple[Fraction, ...] | None = None
    corrected_graph_closeness: Fraction | None = None


def closed_form_closeness(spec) -> ClosedFormResult:
    """Per-vertex and graph-level closeness from the printed closed forms.

    Vertex order matches :func:`closeness.generators.make_family`.
    """
    kind, p = spec.kind, spec.params
    n = p[0]
    F = Fraction
    if kind == "complete":
        if n < 2:
            raise GraphInputError("closeness undefined for a single vertex")
        return ClosedFormResult(kind, (F(1),) * n, F(1))
    if kind == "cycle":
        c = F(n - 1, n * n // 4)
        return ClosedFormResult(kind, (c,) * n, c)
    if kind == "wheel":
        per = (F(1),) + (F(n - 1, 2 * n - 5),) * (n - 1)
        return ClosedFormResult(kind, per, F(n * n - 4, n * (2 * n - 5)))
    if kind == "star":
        per = (F(1),) + (F(n, 2 * n - 1),) * n
        return ClosedFormResult(kind, per, F(n * n + 2 * n - 1, 2 * n * n + n - 1))
    if kind == "near_complete":
        per = (F(n - 1, n),) * 2 + (F(1),) * (n - 2)
        return ClosedFormResult(kind, per, F(n * n - 2, n * n))
    if kind == "cocktail":
        c = F(2 * n - 1, 2 * n)
        return ClosedFormResult(kind, (c,) * (2 * n), c)
    if kind == "bipartite":
        m, k = p
        side_m = F(m + k - 1, k + 2 * m - 2)
        side_k = F(m + k - 1, m + 2 * k - 2)
        graph = F(m + k - 1, m + k) * (F(m, k + 2 * m - 2) + F(k, m + 2 * k - 2))
        return ClosedFormResult(kind, (side_m,) * m + (side_k,) * k, graph)
    if kind == "crown":
        c = F(2 * n - 1, 3 * n)
        return ClosedFormResult(kind, (c,) * (2 * n), c)
    if kind == "path":
        if n < 2:
            raise GraphInputError("closeness undefined for a single vertex")
        per = tuple(F(4 * (n - 1), (2 * k - n + 1) ** 2 + n * n - 1) for k in range(n))
        return ClosedFormResult(kind, per, None)
    if kind == "ladder":
        rail = tuple(F(4 * n - 2, (2 * k - n + 1) ** 2 + n * n + 2 * n - 1) for k in range(n))
        return ClosedFormResult(kind, rail + rail, None)
    if kind == "circular_ladder":
        den = 2 * (n * n // 4) + n
        printed = F(n - 1, den)
        corrected = F(2 * n - 1, den)
        note = (
            f"printed numerator n-1 gives {printed} per vertex; the graph has 2n={2 * n} vertices "
            f"and numerator 2n-1 gives {corrected}"
        )
        return ClosedFormResult(
            kind, (printed,) * (2 * n), printed, note, (corrected,) * (2 * n), corrected
        )
    if kind == "hypercube":
        c = F(2**n - 1, n * 2 ** (n - 1))
        return ClosedFormResult(kind, (c,) * (2**n), c)
    raise GraphInputError(f"unknown family {kind!r}")
