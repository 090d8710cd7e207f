"""Planar-diagram (PD) knot and link diagrams.

Each crossing is ``X[a,b,c,d]``: the four incident edge labels listed
counterclockwise, starting from the incoming under-strand.  The under-strand
therefore runs ``a -> c``; the over-strand runs ``d -> b`` at a positive
crossing and ``b -> d`` at a negative one.  Orientation of the over-strands
is recovered by walking each component from an under-passage, so no
particular edge numbering is required of the input.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Iterable, Sequence


class DiagramError(ValueError):
    """Raised for malformed or inconsistent PD input."""


@dataclass(frozen=True)
class Crossing:
    edges: tuple[int, int, int, int]
    sign: int

    @property
    def under_in(self) -> int:
        return self.edges[0]

    @property
    def under_out(self) -> int:
        return self.edges[2]

    @property
    def over_in(self) -> int:
        return self.edges[3] if self.sign > 0 else self.edges[1]

    @property
    def over_out(self) -> int:
        return self.edges[1] if self.sign > 0 else self.edges[3]


# slot across the crossing on the same strand
_OPPOSITE = (2, 3, 0, 1)


def _orient(pd: Sequence[Sequence[Hashable]]):
    """Walk every component of a PD code.

    Returns ``(signs, components)`` where ``components`` is a list of edge
    sequences in traversal order.  Raises :class:`DiagramError` for labels
    that do not occur exactly twice or for strands whose direction clashes.
    """
    where: dict[Hashable, list[tuple[int, int]]] = {}
    for i, x in enumerate(pd):
        for s, label in enumerate(x):
            where.setdefault(label, []).append((i, s))
    for label, occ in where.items():
        if len(occ) != 2:
            raise DiagramError(f"edge label {label!r} occurs {len(occ)} time(s); expected exactly 2")

    # over_in[i]: slot (1 or 3) where the over-strand enters crossing i
    over_in: list[int | None] = [None] * len(pd)
    incoming_seen: set[tuple[int, int]] = set()
    components: list[list[Hashable]] = []

    def other(label, at):
        a, b = where[label]
        return b if a == at else a

    def walk(start: tuple[int, int]) -> list[Hashable]:
        edges = []
        i, s = start
        while True:
            incoming_seen.add((i, s))
            out = (i, _OPPOSITE[s])
            label = pd[i][out[1]]
            edges.append(label)
            j, t = other(label, out)
            if t == 2:
                raise DiagramError(
                    f"orientation inconsistency at edge label {label!r}: "
                    "it leaves one crossing and also leaves another"
                )
            if t in (1, 3):
                if over_in[j] is None:
                    over_in[j] = t
                elif over_in[j] != t:
                    raise DiagramError(
                        f"orientation inconsistency at edge label {label!r}: "
                        f"over-strand of crossing {j} entered from both sides"
                    )
            if (j, t) == start:
                return edges
            if (j, t) in incoming_seen:
                raise DiagramError(f"orientation inconsistency at edge label {label!r}")
            i, s = j, t

    for i in range(len(pd)):
        if (i, 0) not in incoming_seen:
            components.append(walk((i, 0)))
    # components made only of over-passes: orient by label order
    for i in range(len(pd)):
        if over_in[i] is None:
            b, d = pd[i][1], pd[i][3]
            if isinstance(b, int) and isinstance(d, int) and (d - b == 1 or b - d > 1):
                over_in[i] = 1
            else:
                over_in[i] = 3
            components.append(walk((i, over_in[i])))

    signs = [1 if s == 3 else -1 for s in over_in]
    return signs, components


@dataclass(frozen=True)
class Diagram:
    """A validated PD diagram.  Build with :func:`from_pd` or :func:`parse_pd`."""

    crossings: tuple[Crossing, ...]
    _components: tuple[tuple[int, ...], ...] = field(repr=False, compare=False, default=())

    @property
    def pd(self) -> tuple[tuple[int, int, int, int], ...]:
        return tuple(x.edges for x in self.crossings)

    @property
    def c(self) -> int:
        return len(self.crossings)

    @property
    def n_edges(self) -> int:
        return 2 * len(self.crossings)

    @property
    def components(self) -> int:
        return max(1, len(self._components))

    @property
    def component_edges(self) -> tuple[tuple[int, ...], ...]:
        return self._components

    @property
    def signs(self) -> tuple[int, ...]:
        return tuple(x.sign for x in self.crossings)

    @cached_property
    def edge_labels(self) -> tuple[int, ...]:
        return tuple(sorted({e for x in self.crossings for e in x.edges}))

    def crossing_sign(self, index: int) -> int:
        return self.crossings[index].sign

    def head(self, label: int) -> tuple[int, int]:
        """``(crossing, slot)`` where the edge ``label`` ends (enters a crossing)."""
        for i, x in enumerate(self.crossings):
            for s, e in enumerate(x.edges):
                if e == label and (s == 0 or (s == 3 and x.sign > 0) or (s == 1 and x.sign < 0)):
                    return i, s
        raise KeyError(label)

    def tail(self, label: int) -> tuple[int, int]:
        """``(crossing, slot)`` where the edge ``label`` starts (leaves a crossing)."""
        for i, x in enumerate(self.crossings):
            for s, e in enumerate(x.edges):
                if e == label and (s == 2 or (s == 1 and x.sign > 0) or (s == 3 and x.sign < 0)):
                    return i, s
        raise KeyError(label)

    def to_text(self) -> str:
        return " ".join("X[{},{},{},{}]".format(*x.edges) for x in self.crossings)

    def to_json(self) -> str:
        return json.dumps({"crossings": [list(x.edges) for x in self.crossings]})

    def __str__(self) -> str:
        return self.to_text() or "unknot"


def from_pd(pd: Iterable[Sequence[int]]) -> Diagram:
    pd = [tuple(x) for x in pd]
    for x in pd:
        if len(x) != 4:
            raise DiagramError(f"crossing {x!r} does not have four edge labels")
    signs, comps = _orient(pd)
    crossings = tuple(Crossing(tuple(int(e) for e in x), s) for x, s in zip(pd, signs))
    return Diagram(crossings, tuple(tuple(c) for c in comps))


def canonical(pd: Sequence[Sequence[Hashable]]) -> Diagram:
    """Relabel arbitrary hashable edge labels to ``1..2c`` along each component.

    Components are numbered in order of first appearance; within a component
    consecutive edges get consecutive labels, starting from the edge leaving
    the first crossing visited.
    """
    pd = [tuple(x) for x in pd]
    _, comps = _orient(pd)
    relabel: dict[Hashable, int] = {}
    for comp in comps:
        for label in comp:
            relabel[label] = len(relabel) + 1
    return from_pd([tuple(relabel[e] for e in x) for x in pd])


_TOKEN = re.compile(r"X\[\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\]")


def parse_pd(text: str) -> Diagram:
    """Parse PD text, its JSON form, or a catalog name."""
    stripped = text.strip()
    if stripped in CATALOG or stripped == "":
        return catalog(stripped or "unknot")
    if stripped.startswith("{") or stripped.startswith("["):
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise DiagramError(f"malformed JSON diagram: {exc}") from None
        rows = data["crossings"] if isinstance(data, dict) else data
        if not all(isinstance(r, list) and len(r) == 4 and all(isinstance(v, int) for v in r) for r in rows):
            raise DiagramError("JSON crossings must be lists of four integers")
        return from_pd(rows)
    if "X[" not in stripped:
        raise DiagramError(f"unknown knot name {stripped!r}; known: {', '.join(CATALOG)}")
    pd = []
    pos = 0
    for m in _TOKEN.finditer(stripped):
        gap = stripped[pos:m.start()]
        if gap.strip(" \t\r\n,"):
            raise DiagramError(f"malformed token near {gap.strip()!r}")
        pd.append(tuple(int(g) for g in m.groups()))
        pos = m.end()
    tail = stripped[pos:]
    if tail.strip(" \t\r\n,"):
        raise DiagramError(f"malformed token near {tail.strip()!r}")
    return from_pd(pd)


def crossing_sign(d: Diagram, index: int) -> int:
    return d.crossing_sign(index)


def writhe(d: Diagram) -> int:
    return sum(d.signs)


def mirror(d: Diagram) -> Diagram:
    """Swap over and under at every crossing.

    The planar picture is unchanged, so each PD tuple is rotated so that it
    starts at the old over-strand's incoming edge.
    """
    pd = []
    for x in d.crossings:
        a, b, c, e = x.edges
        pd.append((e, a, b, c) if x.sign > 0 else (b, c, e, a))
    return from_pd(pd)


def connected_sum(d1: Diagram, d2: Diagram, site1: int | None = None, site2: int | None = None) -> Diagram:
    """Splice two knot diagrams along one edge of each.

    The splice edges default to the lowest-numbered edge of each diagram.  The
    tail of ``site1`` is joined to the head of ``site2`` and vice versa.
    """
    for name, d in (("first", d1), ("second", d2)):
        if d.components != 1:
            raise DiagramError(f"connected sum needs knots; {name} diagram has {d.components} components")
    if d2.c == 0:
        return d1
    if d1.c == 0:
        return d2
    e1 = d1.edge_labels[0] if site1 is None else site1
    e2 = d2.edge_labels[0] if site2 is None else site2
    h1 = d1.head(e1)
    h2 = d2.head(e2)
    pd: list[list[Hashable]] = [[(1, e) for e in x.edges] for x in d1.crossings]
    pd += [[(2, e) for e in x.edges] for x in d2.crossings]
    pd[h1[0]][h1[1]] = (2, e2)
    pd[d1.c + h2[0]][h2[1]] = (1, e1)
    return canonical(pd)


# Reduced alternating diagrams; edges numbered along the orientation.
_CATALOG_PD: dict[str, list[tuple[int, int, int, int]]] = {
    "unknot": [],
    "3_1": [(1, 4, 2, 5), (3, 6, 4, 1), (5, 2, 6, 3)],
    "4_1": [(4, 2, 5, 1), (8, 6, 1, 5), (6, 3, 7, 4), (2, 7, 3, 8)],
    "5_1": [(2, 8, 3, 7), (4, 10, 5, 9), (6, 2, 7, 1), (8, 4, 9, 3), (10, 6, 1, 5)],
    "5_2": [(1, 5, 2, 4), (3, 9, 4, 8), (5, 1, 6, 10), (7, 3, 8, 2), (9, 7, 10, 6)],
    "6_1": [(1, 7, 2, 6), (3, 10, 4, 11), (5, 3, 6, 2), (7, 1, 8, 12), (9, 4, 10, 5), (11, 9, 12, 8)],
    "6_2": [(1, 8, 2, 9), (3, 11, 4, 10), (5, 1, 6, 12), (7, 2, 8, 3), (9, 7, 10, 6), (11, 5, 12, 4)],
    "6_3": [(4, 2, 5, 1), (8, 4, 9, 3), (12, 9, 1, 10), (10, 5, 11, 6), (6, 11, 7, 12), (2, 8, 3, 7)],
}

CATALOG = tuple(_CATALOG_PD)


def catalog(name: str) -> Diagram:
    try:
        pd = _CATALOG_PD[name]
    except KeyError:
        raise DiagramError(f"unknown knot name {name!r}; known: {', '.join(CATALOG)}") from None
    return from_pd(pd)
