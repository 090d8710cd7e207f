"""Kauffman states, all-A / all-B state graphs and adequacy."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Sequence

from scipy.cluster.hierarchy import DisjointSet

from .diagram import Diagram

Resolution = Literal["A", "B"]


def _smoothing_pairs(edges, choice: Resolution):
    a, b, c, d = edges
    # A joins (a,b),(c,d); B joins (a,d),(b,c)
    if choice == "A":
        return (a, b), (c, d)
    return (a, d), (b, c)


def _circles(d: Diagram, state: Sequence[Resolution]) -> DisjointSet:
    ds = DisjointSet(d.edge_labels)
    for x, choice in zip(d.crossings, state):
        for u, v in _smoothing_pairs(x.edges, choice):
            ds.merge(u, v)
    return ds


def resolve(d: Diagram, state: Sequence[Resolution]) -> int:
    """Number of state circles after smoothing every crossing as ``state`` says."""
    if len(state) != d.c:
        raise ValueError(f"state has length {len(state)}, diagram has {d.c} crossings")
    if d.c == 0:
        return 1
    return len(_circles(d, state).subsets())


@dataclass(frozen=True)
class StateGraph:
    n_circles: int
    edges: tuple[tuple[int, int], ...]
    one_edged_loop: bool

    def to_dict(self) -> dict:
        return {
            "circles": self.n_circles,
            "edges": [list(e) for e in self.edges],
            "one_edged_loop": self.one_edged_loop,
        }


def state_graph(d: Diagram, which: Resolution) -> StateGraph:
    if d.c == 0:
        return StateGraph(1, (), False)
    ds = _circles(d, [which] * d.c)
    roots = sorted({ds[e] for e in d.edge_labels})
    index = {r: i for i, r in enumerate(roots)}
    edges = []
    for x in d.crossings:
        (u, _), (v, _) = _smoothing_pairs(x.edges, which)
        edges.append((index[ds[u]], index[ds[v]]))
    loop = any(i == j for i, j in edges)
    return StateGraph(len(roots), tuple(edges), loop)


def is_adequate(d: Diagram) -> tuple[bool, bool]:
    return (not state_graph(d, "A").one_edged_loop, not state_graph(d, "B").one_edged_loop)


@dataclass(frozen=True)
class DiagramStats:
    c: int
    c_plus: int
    c_minus: int
    wr: int
    v_A: int
    v_B: int
    a_adequate: bool
    b_adequate: bool

    @property
    def adequate(self) -> bool:
        return self.a_adequate and self.b_adequate

    def to_dict(self) -> dict:
        return {
            "c": self.c, "c_plus": self.c_plus, "c_minus": self.c_minus, "wr": self.wr,
            "v_A": self.v_A, "v_B": self.v_B,
            "a_adequate": self.a_adequate, "b_adequate": self.b_adequate,
        }


def stats(d: Diagram) -> DiagramStats:
    ga, gb = state_graph(d, "A"), state_graph(d, "B")
    c_plus = sum(1 for s in d.signs if s > 0)
    c_minus = d.c - c_plus
    return DiagramStats(
        c=d.c, c_plus=c_plus, c_minus=c_minus, wr=c_plus - c_minus,
        v_A=ga.n_circles, v_B=gb.n_circles,
        a_adequate=not ga.one_edged_loop, b_adequate=not gb.one_edged_loop,
    )
