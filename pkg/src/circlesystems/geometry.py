"""Closed-form oracles for tangent-circle configurations.

Covers the mate-radius formulas for a circle tangent to a base circle and
to a second circle already tangent to the base (interior and exterior
variants), the exterior angle bound where the mate degenerates to a line,
the strict arc inequality for nested non-crossing tangent pairs, the
grid-search infeasibility report for the gadget attachment pattern, and a
Descartes-identity residual used as an independent packing check.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .errors import DomainError, InvalidConfig, NotTangent
from .packing import Circle

INTERIOR = "INTERIOR"
EXTERIOR = "EXTERIOR"


def inner_mate_radius(r1: float, r2: float, phi: float) -> float:
    """Radius of the circle inside C1 tangent to it at angle ``phi`` from
    the C1/C2 tangency and externally tangent to C2 (which sits inside C1).

    Strictly increasing in phi on (0, pi].
    """
    if not (0.0 < r2 < r1):
        raise DomainError("need 0 < r2 < r1")
    if not (0.0 < phi <= math.pi):
        raise DomainError("need phi in (0, pi]")
    return r1 - 2.0 * r1 * r2 / (r1 + r2 - (r1 - r2) * math.cos(phi))


def outer_mate_radius(r1: float, r2: float, phi: float) -> float:
    """Radius of the circle outside C1 tangent to it at angle ``phi`` from
    the C1/C2 tangency and externally tangent to C2 (also outside C1).

    Strictly increasing in phi and unbounded as phi approaches
    ``outer_phi_max(r1, r2)``, where the circle flattens into the common
    tangent line.
    """
    if r1 <= 0.0 or r2 <= 0.0:
        raise DomainError("radii must be positive")
    if phi <= 0.0:
        raise DomainError("need phi > 0")
    denom = r2 - r1 + (r2 + r1) * math.cos(phi)
    if denom <= 0.0 or phi >= outer_phi_max(r1, r2):
        raise DomainError(
            f"phi={phi!r} at or beyond the degeneration angle "
            f"{outer_phi_max(r1, r2)!r}"
        )
    return 2.0 * r1 * r2 / denom - r1


def outer_phi_max(r1: float, r2: float) -> float:
    """Supremum tangency angle for the exterior mate circle."""
    if r1 <= 0.0 or r2 <= 0.0:
        raise DomainError("radii must be positive")
    return math.acos((r1 - r2) / (r1 + r2))


# -- constructive checks --------------------------------------------------------


def build_inner_configuration(r1, r2, phi):
    """Circles (C1, C2, C) realizing the interior mate formula."""
    r = inner_mate_radius(r1, r2, phi)
    c1 = Circle(0.0, 0.0, r1)
    c2 = Circle(r1 - r2, 0.0, r2)
    c = Circle((r1 - r) * math.cos(phi), (r1 - r) * math.sin(phi), r)
    return c1, c2, c


def build_outer_configuration(r1, r2, phi):
    """Circles (C1, C2, C) realizing the exterior mate formula."""
    r = outer_mate_radius(r1, r2, phi)
    c1 = Circle(0.0, 0.0, r1)
    c2 = Circle(r1 + r2, 0.0, r2)
    c = Circle((r1 + r) * math.cos(phi), (r1 + r) * math.sin(phi), r)
    return c1, c2, c


def tangency_residual(a: Circle, b: Circle) -> float:
    """Relative deviation from external tangency of two circles."""
    d = math.hypot(a.cx - b.cx, a.cy - b.cy)
    return abs(d - (a.r + b.r)) / (a.r + b.r)


# -- nested arc-pair inequality --------------------------------------------------


@dataclass(frozen=True)
class ArcPairConfig:
    """Two non-crossing tangent circle pairs hanging off one base circle.

    The outer pair touches the base at angles ``alpha`` and ``beta``, the
    inner pair at ``alpha_p`` and ``beta_p``; the four touch angles occur in
    the order alpha < alpha_p < beta_p < beta within a span below pi, and
    all four circles sit on the same side of the base circle.
    """

    base_radius: float
    alpha: float
    beta: float
    alpha_p: float
    beta_p: float
    side: str
    rho1: float
    rho2: float
    rho1_p: float
    rho2_p: float

    def circles(self):
        sign = -1.0 if self.side == INTERIOR else 1.0

        def on_base(angle, rho):
            d = self.base_radius + sign * rho
            return Circle(d * math.cos(angle), d * math.sin(angle), rho)

        return (
            on_base(self.alpha, self.rho1),
            on_base(self.beta, self.rho2),
            on_base(self.alpha_p, self.rho1_p),
            on_base(self.beta_p, self.rho2_p),
        )


def _validate_config(cfg: ArcPairConfig, tol=1e-9):
    if cfg.side not in (INTERIOR, EXTERIOR):
        raise InvalidConfig(f"unknown side {cfg.side!r}")
    if not (cfg.alpha < cfg.alpha_p < cfg.beta_p < cfg.beta):
        raise InvalidConfig("touch angles out of order")
    if not (cfg.beta - cfg.alpha < math.pi):
        raise InvalidConfig("total span must stay below pi")
    mate = inner_mate_radius if cfg.side == INTERIOR else outer_mate_radius
    for rho_a, rho_b, span in (
        (cfg.rho1, cfg.rho2, cfg.beta - cfg.alpha),
        (cfg.rho1_p, cfg.rho2_p, cfg.beta_p - cfg.alpha_p),
    ):
        expect = mate(cfg.base_radius, rho_a, span)
        if abs(expect - rho_b) > tol * max(1.0, abs(rho_b)):
            raise InvalidConfig(
                f"pair radii {rho_a}, {rho_b} are not mutually tangent"
            )
    c1, c2, c1p, c2p = cfg.circles()
    for a, b in ((c1, c1p), (c1, c2p), (c2, c1p), (c2, c2p)):
        d = math.hypot(a.cx - b.cx, a.cy - b.cy)
        if d <= (a.r + b.r) * (1.0 + tol):
            raise InvalidConfig("the two pairs cross or touch")


def nested_arc_inequality(cfg: ArcPairConfig) -> bool:
    """True when the inner pair's gap arc is strictly shorter than both
    flanking arcs of the outer pair."""
    _validate_config(cfg)
    inner = cfg.beta_p - cfg.alpha_p
    return inner < cfg.alpha_p - cfg.alpha and inner < cfg.beta - cfg.beta_p


def symmetric_pair_radius(span: float, side: str) -> float:
    """Radius of the equal-size tangent pair touching the base circle at two
    points ``span`` apart (the smallest the larger pair member can be)."""
    if side == EXTERIOR:
        c = math.cos(span)
        return ((1.0 - c) + math.sqrt(2.0 * (1.0 - c))) / (1.0 + c)
    lo, hi = 1e-9, 1.0 - 1e-9
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        if inner_mate_radius(1.0, mid, span) > mid:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def sample_arc_pair_config(rng: random.Random, side: str,
                           max_tries: int = 500) -> ArcPairConfig:
    """Rejection-sample a valid configuration with unit base circle.

    The inner pair's touch points must sit strictly between the outer
    pair's, so the inner span is drawn below the flanking gaps; both pair
    radii start from the symmetric-pair size with a log-uniform jitter, and
    crossing candidates are rejected.
    """
    mate = inner_mate_radius if side == INTERIOR else outer_mate_radius
    for _ in range(max_tries):
        span = rng.uniform(0.5, math.pi - 0.05)
        g1 = rng.uniform(0.2, 0.4) * span
        gap_cap = min(g1, rng.uniform(0.2, 0.4) * span)
        inner_span = rng.uniform(0.15, 0.75) * gap_cap
        if span - g1 - inner_span <= 0.02:
            continue
        try:
            rho1 = symmetric_pair_radius(span, side) * math.exp(
                rng.uniform(-0.25, 0.25)
            )
            rho1_p = symmetric_pair_radius(inner_span, side) * math.exp(
                rng.uniform(-0.25, 0.25)
            )
            if side == INTERIOR and not (0.0 < rho1 < 1.0 and 0.0 < rho1_p < 1.0):
                continue
            rho2 = mate(1.0, rho1, span)
            rho2_p = mate(1.0, rho1_p, inner_span)
        except DomainError:
            continue
        if min(rho2, rho2_p) <= 0.0:
            continue
        cfg = ArcPairConfig(
            base_radius=1.0,
            alpha=0.0,
            beta=span,
            alpha_p=g1,
            beta_p=g1 + inner_span,
            side=side,
            rho1=rho1,
            rho2=rho2,
            rho1_p=rho1_p,
            rho2_p=rho2_p,
        )
        try:
            _validate_config(cfg)
        except InvalidConfig:
            continue
        return cfg
    raise InvalidConfig(f"no valid configuration after {max_tries} tries")


# -- gadget attachment infeasibility ---------------------------------------------


@dataclass(frozen=True)
class InfeasibilityReport:
    feasible_found: bool
    tested: int
    phi: float
    grid: int
    witness: tuple | None = None


def gadget_arc_infeasibility(phi: float, grid: int) -> InfeasibilityReport:
    """Exhaustive search for an eight-point attachment placement on an arc.

    Places ordered grid angles z1 < ... < z8 within an arc of angle ``phi``
    and applies the strict arc inequalities the nested tangent pairs force
    on the pairing (z1,z6), (z2,z5), (z3,z8), (z4,z7).  The search is a
    complete branch-and-bound: subtrees are cut only when an interval bound
    proves no completion can satisfy the constraints.  ``tested`` counts the
    partial placements enumerated.
    """
    if not (0.0 < phi < math.pi):
        raise DomainError("phi must lie strictly between 0 and pi")
    if grid < 8:
        raise DomainError("grid must allow at least 8 distinct angles")

    G = grid
    tested = 0
    witness = None
    # all constraints scale with phi/grid, so pure index arithmetic is exact:
    #   (a) z5-z2 < z2-z1   (b) z6-z5 > z5-z2
    #   (c) z7-z4 < z4-z3   (d) z8-z7 > z7-z4
    for z1 in range(0, G - 6):
        for z2 in range(z1 + 1, G - 5):
            d1 = z2 - z1
            z5_hi = min(z2 + d1 - 1, G - 3)
            for z5 in range(z2 + 3, z5_hi + 1):
                tested += 1
                d2 = z5 - z2
                z6_lo = z5 + d2 + 1
                if z6_lo > G - 2:
                    continue
                # the largest reachable 2*z4 - z3 given z2 < z3 < z4 < z5
                z7_cap = 2 * (z5 - 1) - (z2 + 1)
                for z6 in range(z6_lo, G - 1):
                    tested += 1
                    if z6 + 1 >= z7_cap:
                        continue  # no z7 can satisfy (c) for any z3, z4
                    for z3 in range(z2 + 1, z5 - 1):
                        for z4 in range(z3 + 1, z5):
                            tested += 1
                            cap = 2 * z4 - z3
                            for z7 in range(z6 + 1, min(cap, G)):
                                tested += 1
                                z8_lo = 2 * z7 - z4 + 1
                                for z8 in range(max(z8_lo, z7 + 1), G + 1):
                                    tested += 1
                                    witness = (z1, z2, z3, z4, z5, z6, z7, z8)
                                    scale = phi / G
                                    return InfeasibilityReport(
                                        feasible_found=True,
                                        tested=tested,
                                        phi=phi,
                                        grid=grid,
                                        witness=tuple(
                                            z * scale for z in witness
                                        ),
                                    )
    return InfeasibilityReport(
        feasible_found=False, tested=tested, phi=phi, grid=grid, witness=None
    )


# -- Descartes identity -----------------------------------------------------------


def descartes_check(c1: Circle, c2: Circle, c3: Circle, c4: Circle,
                    tol: float = 1e-6) -> float:
    """Relative residual of the four-tangent-circles curvature identity.

    A circle that encloses the others through internal tangencies gets a
    negative curvature.  Raises NotTangent when some pair is neither
    externally nor internally tangent within ``tol``.
    """
    circles = (c1, c2, c3, c4)
    enclosing = set()
    for i in range(4):
        for j in range(i + 1, 4):
            a, b = circles[i], circles[j]
            d = math.hypot(a.cx - b.cx, a.cy - b.cy)
            scale = a.r + b.r
            if abs(d - (a.r + b.r)) <= tol * scale:
                continue
            if abs(d - abs(a.r - b.r)) <= tol * scale:
                enclosing.add(i if a.r > b.r else j)
                continue
            raise NotTangent(
                f"circles {i} and {j}: center distance {d!r} matches neither "
                "external nor internal tangency"
            )
    if len(enclosing) > 1:
        raise NotTangent("more than one enclosing circle")
    curvatures = [
        (-1.0 if i in enclosing else 1.0) / circles[i].r for i in range(4)
    ]
    s = sum(curvatures)
    q = sum(k * k for k in curvatures)
    lhs = s * s
    rhs = 2.0 * q
    return abs(lhs - rhs) / max(abs(lhs), abs(rhs))
