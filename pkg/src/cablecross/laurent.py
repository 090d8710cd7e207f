"""Sparse integer Laurent polynomials in t, stored in quarter-powers.

An exponent ``e`` stands for ``t**(e/4)``, which is the same as ``A**(-e)``
for the Kauffman bracket variable ``A`` (``t = A**-4``).  Keeping exponents in
quarter units means the four-times-degree quantities used throughout the
package are plain integers.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping


class LaurentPoly:
    """Immutable Laurent polynomial with arbitrary-precision integer coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for e, c in items:
            e = int(e)
            acc[e] = acc.get(e, 0) + int(c)
        self._terms = {e: c for e, c in sorted(acc.items()) if c}
        self._hash = None

    # constructors

    @classmethod
    def zero(cls) -> LaurentPoly:
        return cls()

    @classmethod
    def one(cls) -> LaurentPoly:
        return cls({0: 1})

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> LaurentPoly:
        """``coeff * t**(exponent/4)``."""
        return cls({exponent: coeff})

    @classmethod
    def from_A(cls, terms: Mapping[int, int]) -> LaurentPoly:
        """Build from a ``{power of A: coeff}`` mapping."""
        return cls({-k: c for k, c in terms.items()})

    # accessors

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coeff(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def A_terms(self) -> dict[int, int]:
        return {-e: c for e, c in self._terms.items()}

    # arithmetic

    def __add__(self, other: LaurentPoly | int) -> LaurentPoly:
        other = _coerce(other)
        acc = dict(self._terms)
        for e, c in other._terms.items():
            acc[e] = acc.get(e, 0) + c
        return LaurentPoly(acc)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: LaurentPoly | int) -> LaurentPoly:
        return self + (-_coerce(other))

    def __rsub__(self, other: LaurentPoly | int) -> LaurentPoly:
        return _coerce(other) - self

    def __mul__(self, other: LaurentPoly | int) -> LaurentPoly:
        other = _coerce(other)
        acc: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials can be inverted")
            (e, c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("only unit monomials can be inverted")
            return LaurentPoly({e * k: c ** -k})
        result = LaurentPoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def invert_variable(self) -> LaurentPoly:
        """Substitute ``t -> 1/t``."""
        return LaurentPoly({-e: c for e, c in self._terms.items()})

    def shift(self, exponent: int) -> LaurentPoly:
        """Multiply by ``t**(exponent/4)``."""
        return LaurentPoly({e + exponent: c for e, c in self._terms.items()})

    # comparison

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    # degrees

    def min_exponent(self) -> int:
        if not self._terms:
            raise ValueError("undefined degree: zero polynomial")
        return next(iter(self._terms))

    def max_exponent(self) -> int:
        if not self._terms:
            raise ValueError("undefined degree: zero polynomial")
        return next(reversed(self._terms))

    # rendering

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"{c}*t^({e}/4)" for e, c in self._terms.items())

    def pretty(self) -> str:
        """Human rendering with reduced fractional exponents, e.g. ``t^(-1/2) - 1``."""
        if not self._terms:
            return "0"
        out = []
        for e, c in self._terms.items():
            power = Fraction(e, 4)
            if power == 0:
                mono = ""
            elif power == 1:
                mono = "t"
            else:
                mono = f"t^({power})" if power.denominator != 1 else f"t^{power}"
            mag = abs(c)
            body = mono if (mag == 1 and mono) else (f"{mag}*{mono}" if mono else str(mag))
            sign = "-" if c < 0 else "+"
            out.append((sign, body))
        first_sign, first = out[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in out[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"LaurentPoly({self._terms!r})"


def _coerce(x: LaurentPoly | int) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly({0: x})
    raise TypeError(f"cannot combine LaurentPoly with {type(x).__name__}")


def add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p + q


def mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p * q


def degree_span(p: LaurentPoly) -> tuple[Fraction, Fraction, int]:
    """Return ``(d_min, d_max, span4)`` with degrees measured in ``t``.

    ``span4`` is ``4*d_max - 4*d_min`` and is always an integer.
    """
    if p.is_zero():
        raise ValueError("undefined degree: zero polynomial")
    lo, hi = p.min_exponent(), p.max_exponent()
    return Fraction(lo, 4), Fraction(hi, 4), hi - lo


# t^(1/2), used for the unknot and the bracket loop value
T_HALF = LaurentPoly.monomial(2)
T_MINUS_HALF = LaurentPoly.monomial(-2)
