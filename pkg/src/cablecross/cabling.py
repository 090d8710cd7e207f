"""Blackboard cables ``D^q`` and the twisted cable diagrams ``D_{p,q}``.

Strand positions along an edge are counted from the right-hand side of the
edge's direction of travel, position 0 being rightmost.  Parallel copies keep
their position through a crossing, so copy ``j`` of an edge is one physical
strand at both of its ends.

Twist convention: every twist crossing has the sign of ``t``, with the
sliding strand on top.  For ``t < 0`` the rightmost strand slides left over
the other ``q - 1``; for ``t > 0`` the leftmost strand slides right.  Hence

    wr(D_{p,q}) = q**2 * wr(D) + t * (q - 1)

and for ``t < 0`` no positive crossings are added.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .diagram import Diagram, DiagramError, canonical, writhe


@dataclass(frozen=True)
class CableSpec:
    p: int
    q: int
    t: int


def _crossing(u_in, u_out, o_in, o_out, sign):
    # PD tuple counterclockwise from the incoming under-strand
    if sign > 0:
        return (u_in, o_out, u_out, o_in)
    return (u_in, o_in, u_out, o_out)


def _grid(d: Diagram, q: int, head_rename: dict | None = None):
    """Raw PD (tuple labels) of the blackboard q-cable.

    ``head_rename`` maps ``(edge, j)`` to a replacement label used where that
    copy enters its head crossing; the twist region hooks in through it.
    """
    head_rename = head_rename or {}

    def at_head(e, j):
        return head_rename.get((e, j), ("E", e, j))

    pd = []
    for ci, x in enumerate(d.crossings):
        a, b, c, dd = x.edges
        s = x.sign
        # over copy k travels east (s>0, k=0 southmost) or west (s<0, k=0 northmost)
        o_in_edge, o_out_edge = (dd, b) if s > 0 else (b, dd)
        # under copy j meets over copies in this order going north
        k_order = list(range(q)) if s > 0 else list(range(q - 1, -1, -1))
        # over copy k meets under copies in this order (under copy j sits at x = -j)
        j_order = list(range(q - 1, -1, -1)) if s > 0 else list(range(q))

        def under_seg(j, m):
            if m == 0:
                return at_head(a, j)
            if m == q:
                return ("E", c, j)
            return ("u", ci, j, m)

        def over_seg(k, m):
            if m == 0:
                return at_head(o_in_edge, k)
            if m == q:
                return ("E", o_out_edge, k)
            return ("o", ci, k, m)

        for j in range(q):
            for k in range(q):
                mu = k_order.index(k)
                mo = j_order.index(j)
                pd.append(_crossing(under_seg(j, mu), under_seg(j, mu + 1),
                                    over_seg(k, mo), over_seg(k, mo + 1), s))
    return pd


def _twists(e, q: int, t: int):
    """Raw crossings of ``|t|`` twists on the copies of edge ``e``.

    Returns ``(crossings, head_rename)``: the region starts from the labels
    ``("E", e, j)`` and ends in fresh labels that replace the copies' heads.
    """
    cur = [("E", e, j) for j in range(q)]
    pd = []
    sign = 1 if t > 0 else -1
    fresh = 0
    for _ in range(abs(t)):
        if t < 0:
            path = [(i, i + 1) for i in range(q - 1)]
        else:
            path = [(i, i - 1) for i in range(q - 1, 0, -1)]
        for slider, other in path:
            fresh += 1
            new_slider = ("T", e, fresh, "over")
            new_other = ("T", e, fresh, "under")
            pd.append(_crossing(cur[other], new_other, cur[slider], new_slider, sign))
            cur[other], cur[slider] = new_slider, new_other
    head_rename = {(e, j): cur[j] for j in range(q) if cur[j] != ("E", e, j)}
    return pd, head_rename


def blackboard_cable(d: Diagram, q: int) -> Diagram:
    """``q`` parallel copies of ``d`` in the blackboard framing."""
    if q < 1:
        raise ValueError(f"cable needs q >= 1, got q={q}")
    if q == 1:
        return d
    if d.c == 0:
        raise DiagramError("a cable of the crossingless unknot is a split link; PD cannot encode it")
    return canonical(_grid(d, q))


def add_twists(d: Diagram, q: int, t: int, site: int | None = None) -> Diagram:
    """Blackboard ``q``-cable of ``d`` with ``t`` twists inserted on edge ``site``.

    Each twist adds ``q - 1`` crossings.  ``site`` defaults to the
    lowest-numbered edge of ``d``.
    """
    if q < 1:
        raise ValueError(f"cable needs q >= 1, got q={q}")
    if t == 0 or q == 1:
        return blackboard_cable(d, q)
    if d.c == 0:
        raise DiagramError("twisting a cable of the crossingless unknot is not supported")
    e = d.edge_labels[0] if site is None else site
    if e not in d.edge_labels:
        raise DiagramError(f"twist site {e!r} is not an edge of the diagram")
    twist_pd, rename = _twists(e, q, t)
    return canonical(_grid(d, q, rename) + twist_pd)


def cable_diagram(d: Diagram, p: int, q: int, site: int | None = None) -> tuple[Diagram, CableSpec]:
    """The diagram ``D_{p,q}`` of the ``(p, q)``-cable, with ``t = p - q*wr(D)``."""
    if q < 1:
        raise ValueError(f"cable needs q >= 1, got q={q}")
    if gcd(p, q) != 1:
        raise ValueError(f"p={p} and q={q} are not coprime")
    if d.components != 1:
        raise DiagramError(f"cable companion must be a knot, got {d.components} components")
    spec = CableSpec(p, q, p - q * writhe(d))
    if q == 1:
        return d, spec
    return add_twists(d, q, spec.t, site), spec


def expected_crossings(c: int, wr: int, p: int, q: int) -> int:
    return q * q * c + abs(p - q * wr) * (q - 1)
