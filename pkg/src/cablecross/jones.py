"""Brute-force Kauffman bracket and unreduced colored Jones polynomials.

The bracket is a plain state sum over all ``2**c`` Kauffman states.  The
kernel histograms states by (number of B-smoothings, number of circles);
the histogram is an integer sum over disjoint chunks of the state space, so
the result does not depend on how chunks are scheduled across threads.

Colored Jones normalization: with ``A = t**(-1/4)`` and
``delta = -A**2 - A**-2``,

    J_K(n) = theta_n**(-wr(D)) * sum_k s_k * <D^k>,
    theta_n = (-1)**(n-1) * A**(n*n - 1),

where ``S_{n-1}(z) = sum_k s_k z**k`` is the Chebyshev polynomial
(``S_0 = 1``, ``S_1 = z``, ``S_k = z S_{k-1} - S_{k-2}``), ``D^k`` the
blackboard k-cable and ``<.>`` the bracket normalized so that one circle
is ``delta`` and the empty diagram is 1.  This gives ``J_U(n)`` exactly as
``(-1)**(n-1) (t**(-n/2) - t**(n/2)) / (t**(-1/2) - t**(1/2))`` and matches
the adequate degree laws on 3_1 and 4_1 for n = 2, 3 (see tests).
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import NamedTuple

import numba
import numpy as np
from numba.core.errors import NumbaWarning

from .cabling import blackboard_cable
from .degrees import fourd_minus, fourd_plus
from .diagram import Diagram, writhe
from .laurent import LaurentPoly
from .states import stats

warnings.filterwarnings("ignore", message="The TBB threading layer", category=NumbaWarning)

DEFAULT_CAP = 24
# fixed chunk count: the reduction is the same whatever the thread count
_CHUNKS = 64


class OracleInfeasible(RuntimeError):
    """The requested state sum exceeds the configured crossing cap."""


@dataclass(frozen=True)
class BracketResult:
    poly: LaurentPoly
    states_visited: int


@numba.njit(cache=True)
def _find(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


@numba.njit(parallel=True, cache=True)
def _histogram(slots, n_nodes, nchunks):
    c = slots.shape[0]
    total = np.int64(1) << c
    per = (total + nchunks - 1) // nchunks
    hist = np.zeros((nchunks, c + 1, n_nodes + 1), dtype=np.int64)
    for chunk in numba.prange(nchunks):
        parent = np.empty(n_nodes, dtype=np.int32)
        lo = chunk * per
        hi = min(total, lo + per)
        for s in range(lo, hi):
            for v in range(n_nodes):
                parent[v] = v
            circles = n_nodes
            nb = 0
            for i in range(c):
                if (s >> i) & 1:
                    nb += 1
                    u1 = slots[i, 0]
                    v1 = slots[i, 3]
                    u2 = slots[i, 1]
                    v2 = slots[i, 2]
                else:
                    u1 = slots[i, 0]
                    v1 = slots[i, 1]
                    u2 = slots[i, 2]
                    v2 = slots[i, 3]
                r1 = _find(parent, u1)
                r2 = _find(parent, v1)
                if r1 != r2:
                    parent[r1] = r2
                    circles -= 1
                r1 = _find(parent, u2)
                r2 = _find(parent, v2)
                if r1 != r2:
                    parent[r1] = r2
                    circles -= 1
            hist[chunk, nb, circles] += 1
    return hist.sum(axis=0)


def _delta_powers(k: int) -> list[LaurentPoly]:
    delta = LaurentPoly.from_A({2: -1, -2: -1})
    out = [LaurentPoly.one()]
    for _ in range(k):
        out.append(out[-1] * delta)
    return out


def state_histogram(d: Diagram, threads: int | None = None, chunks: int = _CHUNKS) -> np.ndarray:
    """``h[nB, k]`` = number of states with ``nB`` B-smoothings and ``k`` circles."""
    index = {e: i for i, e in enumerate(d.edge_labels)}
    slots = np.array([[index[e] for e in x.edges] for x in d.crossings], dtype=np.int32).reshape(-1, 4)
    previous = numba.get_num_threads()
    if threads is not None:
        numba.set_num_threads(max(1, min(threads, numba.config.NUMBA_NUM_THREADS)))
    try:
        return _histogram(slots, len(index), chunks)
    finally:
        numba.set_num_threads(previous)


def kauffman_bracket(d: Diagram, cap: int = DEFAULT_CAP, threads: int | None = None) -> BracketResult:
    """Bracket normalized so that the crossingless unknot is 1."""
    if d.c == 0:
        return BracketResult(LaurentPoly.one(), 1)
    if d.c > cap:
        raise OracleInfeasible(f"oracle infeasible: {d.c} crossings exceeds cap {cap}")
    hist = state_histogram(d, threads)
    dpow = _delta_powers(hist.shape[1])
    acc: dict[int, int] = {}
    for nb, k in zip(*np.nonzero(hist)):
        # A^(#A - #B) * delta^(k-1)
        a_exp = d.c - 2 * int(nb)
        for e, coef in dpow[int(k) - 1].terms.items():
            acc[e - a_exp] = acc.get(e - a_exp, 0) + coef * int(hist[nb, k])
    return BracketResult(LaurentPoly(acc), 1 << d.c)


def chebyshev(k: int) -> list[int]:
    """Coefficients ``[s_0, ..., s_k]`` of ``S_k(z)``."""
    prev, cur = [1], [0, 1]
    if k == 0:
        return prev
    for _ in range(k - 1):
        nxt = [0] + cur
        for i, v in enumerate(prev):
            nxt[i] -= v
        prev, cur = cur, nxt
    return cur


_CABLE_CACHE: dict[tuple, LaurentPoly] = {}


def _cable_bracket(d: Diagram, k: int, cap: int, threads: int | None) -> LaurentPoly:
    """Bracket of the blackboard k-cable with one circle counted as delta."""
    delta = LaurentPoly.from_A({2: -1, -2: -1})
    if k == 0:
        return LaurentPoly.one()
    if d.c == 0:
        return delta ** k
    key = (d.pd, k)
    if key not in _CABLE_CACHE:
        cable = blackboard_cable(d, k)
        _CABLE_CACHE[key] = delta * kauffman_bracket(cable, cap, threads).poly
    return _CABLE_CACHE[key]


def framing_factor(n: int, wr: int) -> LaurentPoly:
    """``theta_n ** (-wr)`` with ``theta_n = (-1)**(n-1) A**(n*n-1)``."""
    sign = (-1) ** ((n - 1) * (wr % 2))
    return LaurentPoly.from_A({-(n * n - 1) * wr: sign})


def colored_jones(d: Diagram, n: int, cap: int = DEFAULT_CAP, threads: int | None = None) -> LaurentPoly:
    """Unreduced colored Jones polynomial ``J_K(n)`` in ``t``."""
    if n < 1:
        raise ValueError(f"color must be >= 1, got {n}")
    if d.components != 1:
        raise ValueError("colored Jones oracle expects a knot diagram")
    if n == 1:
        return LaurentPoly.one()
    if (n - 1) ** 2 * d.c > cap:
        raise OracleInfeasible(
            f"oracle infeasible: color {n} needs a {(n - 1) ** 2 * d.c}-crossing cable (cap {cap})"
        )
    total = LaurentPoly.zero()
    for k, s in enumerate(chebyshev(n - 1)):
        if s:
            total = total + s * _cable_bracket(d, k, cap, threads)
    return framing_factor(n, writhe(d)) * total


def unknot_value(n: int) -> LaurentPoly:
    """``(-1)**(n-1) (t**(-n/2) - t**(n/2)) / (t**(-1/2) - t**(1/2))`` expanded."""
    # quotient is t^(-(n-1)/2) + t^(-(n-3)/2) + ... + t^((n-1)/2)
    return LaurentPoly({2 * j: (-1) ** (n - 1) for j in range(-(n - 1), n, 2)})


class DegreeCheck(NamedTuple):
    oracle4d_minus: int
    oracle4d_plus: int
    formula4d_minus: int | None
    formula4d_plus: int | None
    match: bool


def degree_check(d: Diagram, n: int, cap: int = DEFAULT_CAP) -> DegreeCheck:
    """Compare oracle degrees of ``J(n)`` with the adequate closed forms.

    Only the sides for which the diagram is adequate are compared; ``match``
    is False when neither side is.
    """
    poly = colored_jones(d, n, cap)
    st = stats(d)
    lo, hi = poly.min_exponent(), poly.max_exponent()
    f_lo = fourd_minus(st, n) if st.a_adequate else None
    f_hi = fourd_plus(st, n) if st.b_adequate else None
    checked = [(lo, f_lo), (hi, f_hi)]
    match = any(f is not None for _, f in checked) and all(f is None or o == f for o, f in checked)
    return DegreeCheck(lo, hi, f_lo, f_hi, match)
