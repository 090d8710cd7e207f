"""Closed-form colored Jones degree laws, in integer units of ``4*degree``.

For an A-adequate diagram the minimal degree, and for a B-adequate diagram
the maximal degree, of ``J_K(n)`` are exact quadratics in ``n`` built from
``c_±``, ``v_A`` and ``v_B``.  Those quadratics feed the cable laws, the case
split by cabling slope, and the Jones diameter of a cable.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .states import DiagramStats


class AdequacyRequired(ValueError):
    """A degree law was requested on a side where the diagram is not adequate."""


class CaseTag(enum.Enum):
    CASE1 = "CASE1"
    CASE2 = "CASE2"
    CASE3 = "CASE3"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class DegreeQuadratic:
    """``q2*n**2 + q1*n + q0`` in 4d units; ``q0 is None`` means unknown."""

    q2: Fraction
    q1: Fraction
    q0: Fraction | None = None

    def __call__(self, n: int) -> Fraction:
        if self.q0 is None:
            raise ValueError("constant term unknown; only q2 and q1 are determined")
        return self.q2 * n * n + self.q1 * n + self.q0

    def without_constant(self, n: int) -> Fraction:
        return self.q2 * n * n + self.q1 * n


def fourd_minus(st: DiagramStats, n: int) -> int:
    """``4 d_-[J(n)] = -2 c_- n^2 + 2 (c - v_A) n + 2 v_A - 2 c_+``."""
    if not st.a_adequate:
        raise AdequacyRequired("minimal-degree law needs an A-adequate diagram")
    return -2 * st.c_minus * n * n + 2 * (st.c - st.v_A) * n + 2 * st.v_A - 2 * st.c_plus


def fourd_plus(st: DiagramStats, n: int) -> int:
    """``4 d_+[J(n)] = 2 c_+ n^2 + 2 (v_B - c) n + 2 c_- - 2 v_B``."""
    if not st.b_adequate:
        raise AdequacyRequired("maximal-degree law needs a B-adequate diagram")
    return 2 * st.c_plus * n * n + 2 * (st.v_B - st.c) * n + 2 * st.c_minus - 2 * st.v_B


def adequate_degrees(st: DiagramStats, n: int) -> tuple[int, int]:
    """``(4 d_-, 4 d_+)`` of ``J(n)`` for an adequate diagram."""
    return fourd_minus(st, n), fourd_plus(st, n)


def classify(st: DiagramStats, p: int, q: int) -> CaseTag:
    """Case split by the slope ``p/q`` against ``2 c_+`` and ``-2 c_-``.

    ``q == 1`` is reported as CASE1: the cable is the knot itself.
    """
    if q == 1:
        return CaseTag.CASE1
    slope = Fraction(p, q)
    if slope == 2 * st.c_plus or -slope == 2 * st.c_minus:
        raise ValueError(f"boundary slope p/q={slope} for c+={st.c_plus}, c-={st.c_minus}")
    if slope > 2 * st.c_plus:
        return CaseTag.CASE2
    if -slope > 2 * st.c_minus:
        return CaseTag.CASE3
    return CaseTag.CASE1


def _require_adequate(st: DiagramStats) -> None:
    if not st.adequate:
        raise AdequacyRequired("cable laws need an adequate companion diagram")
    # linear coefficients are Euler characteristics of state surfaces
    if st.c > 0 and (st.v_B > st.c or st.v_A > st.c):
        raise ValueError(f"bad stats: need v_B <= c and v_A <= c, got {st}")


def cable_quadratics(st: DiagramStats, p: int, q: int) -> tuple[DegreeQuadratic, DegreeQuadratic, CaseTag]:
    """Leading behaviour of ``4 d_±[J_{K_{p,q}}(n)]`` for large ``n``.

    Returns ``(plus, minus, case)``.  Constant terms are unknown except when
    ``q == 1``, where the cable is the knot and its exact laws apply.
    """
    _require_adequate(st)
    if q < 1:
        raise ValueError(f"q must be >= 1, got {q}")
    tag = classify(st, p, q)
    if q == 1:
        plus = DegreeQuadratic(Fraction(2 * st.c_plus), Fraction(2 * (st.v_B - st.c)),
                               Fraction(2 * st.c_minus - 2 * st.v_B))
        minus = DegreeQuadratic(Fraction(-2 * st.c_minus), Fraction(2 * (st.c - st.v_A)),
                                Fraction(2 * st.v_A - 2 * st.c_plus))
        return plus, minus, tag

    a2, a1 = 2 * st.c_plus, 2 * (st.v_B - st.c)           # 4a_2, 4a_1
    a2s, a1s = -2 * st.c_minus, 2 * (st.c - st.v_A)       # 4a_2*, 4a_1*

    def prop(lead: int, lin: int) -> DegreeQuadratic:
        return DegreeQuadratic(Fraction(q * q * lead), Fraction(q * lin + 2 * (q - 1) * (p - q * lead)))

    large = DegreeQuadratic(Fraction(p * q), Fraction(0))
    if tag is CaseTag.CASE1:
        return prop(a2, a1), prop(a2s, a1s), tag
    if tag is CaseTag.CASE2:
        return large, prop(a2s, a1s), tag
    return prop(a2, a1), large, tag


def jones_diameter(st: DiagramStats) -> int:
    """Jones diameter of an adequate knot: ``2 c``."""
    _require_adequate(st)
    return 2 * st.c


def jones_diameter_cable(st: DiagramStats, p: int, q: int) -> tuple[int, CaseTag]:
    _require_adequate(st)
    tag = classify(st, p, q)
    if q == 1:
        return 2 * st.c, tag
    if tag is CaseTag.CASE1:
        return 2 * q * q * st.c, tag
    if tag is CaseTag.CASE2:
        return p * q + 2 * q * q * st.c_minus, tag
    return 2 * q * q * st.c_plus - p * q, tag


def is_admissible_cable(st: DiagramStats, p: int, q: int) -> bool:
    return q == 2 and abs(p - 2 * st.wr) == 1
