"""Exact scalars over the Gaussian rationals Q(i).

A scalar is a pair of arbitrary-precision rationals (re, im) representing
re + im*i.  Both components are kept in lowest terms with positive
denominator by the underlying rational type, so equality is plain
structural equality and every operation is exact.

The wire format is the string grammar ``a/b+c/d*i`` ("1/2-3*i", "2", "-i"
and friends); :func:`GaussRat.parse` and ``str()`` round-trip it.
"""

from __future__ import annotations

import os

from .errors import ParseError

try:  # gmpy2.mpq is a drop-in Fraction with much faster arithmetic
    if os.environ.get("ADJREAL_PURE_PYTHON"):
        raise ImportError("pure-python backend requested")
    from gmpy2 import mpq as _Q
except ImportError:
    from fractions import Fraction as _Q


def rational(num=0, den=1):
    """Build the underlying exact rational type."""
    return _Q(num, den)


_R_ZERO = _Q(0)
_R_ONE = _Q(1)


class GaussRat:
    """Immutable Gaussian rational re + im*i with exact arithmetic."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if type(re) is type(_R_ZERO) else _Q(re)
        self.im = im if type(im) is type(_R_ZERO) else _Q(im)

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_int(n: int) -> "GaussRat":
        return GaussRat(_Q(n), _R_ZERO)

    @staticmethod
    def parse(text: str) -> "GaussRat":
        """Parse the ``a/b+c/d*i`` grammar (also accepts bare ``i``/``-i``)."""
        s = text.strip().replace(" ", "")
        if not s:
            raise ParseError("empty scalar string")
        # split into at most two signed terms (sign at position 0 belongs
        # to the first term)
        terms = []
        start = 0
        for k in range(1, len(s)):
            if s[k] in "+-" and s[k - 1] not in "+-/*":
                terms.append(s[start:k])
                start = k
        terms.append(s[start:])
        if len(terms) > 2:
            raise ParseError(f"not a Gaussian rational: {text!r}")
        re = im = _R_ZERO
        seen_im = seen_re = False
        for term in terms:
            try:
                if term.endswith("i"):
                    if seen_im:
                        raise ParseError(f"two imaginary terms in {text!r}")
                    seen_im = True
                    body = term[:-1]
                    if body.endswith("*"):
                        body = body[:-1]
                    if body in ("", "+"):
                        im = _R_ONE
                    elif body == "-":
                        im = -_R_ONE
                    else:
                        im = _Q(body.lstrip("+"))
                else:
                    if seen_re:
                        raise ParseError(f"two real terms in {text!r}")
                    seen_re = True
                    re = _Q(term.lstrip("+"))
            except (ValueError, ZeroDivisionError) as exc:
                raise ParseError(f"not a Gaussian rational: {text!r}") from exc
        return GaussRat(re, im)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, GaussRat):
            return GaussRat(self.re + other.re, self.im + other.im)
        if isinstance(other, int):
            return GaussRat(self.re + other, self.im)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, GaussRat):
            return GaussRat(self.re - other.re, self.im - other.im)
        if isinstance(other, int):
            return GaussRat(self.re - other, self.im)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return GaussRat(-self.re, -self.im)

    def __mul__(self, other):
        if isinstance(other, GaussRat):
            a, b, c, d = self.re, self.im, other.re, other.im
            return GaussRat(a * c - b * d, a * d + b * c)
        if isinstance(other, int):
            return GaussRat(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, int):
            other = GaussRat.from_int(other)
        if not isinstance(other, GaussRat):
            return NotImplemented
        n = other.re * other.re + other.im * other.im
        if not n:
            raise ZeroDivisionError("division by zero Gaussian rational")
        a, b, c, d = self.re, self.im, other.re, other.im
        return GaussRat((a * c + b * d) / n, (b * c - a * d) / n)

    def __rtruediv__(self, other):
        return GaussRat.from_int(other) / self

    def __pow__(self, k: int):
        if k < 0:
            return GaussRat.from_int(1) / (self ** (-k))
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inverse(self) -> "GaussRat":
        return GaussRat.from_int(1) / self

    def conjugate(self) -> "GaussRat":
        return GaussRat(self.re, -self.im)

    def norm(self):
        """Field norm re^2 + im^2, an exact rational."""
        return self.re * self.re + self.im * self.im

    # -- predicates / ordering --------------------------------------------

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __eq__(self, other) -> bool:
        if isinstance(other, GaussRat):
            return self.re == other.re and self.im == other.im
        if isinstance(other, int):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def lex_key(self):
        """Deterministic (re, im) sort key; not a number ordering."""
        return (self.re, self.im)

    # -- formatting --------------------------------------------------------

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        if self.re:
            parts.append(str(self.re))
        if self.im:
            mag = f"{abs(self.im)}*i"
            if not parts:
                parts.append(mag if self.im > 0 else "-" + mag)
            else:
                parts.append(("+" if self.im > 0 else "-") + mag)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"GaussRat({self})"


ZERO = GaussRat.from_int(0)
ONE = GaussRat.from_int(1)
I = GaussRat(_R_ZERO, _R_ONE)
MINUS_ONE = GaussRat.from_int(-1)


def gr(re=0, im=0) -> GaussRat:
    """Shorthand constructor accepting ints, rationals, or strings."""
    if isinstance(re, str):
        return GaussRat.parse(re) if im == 0 else GaussRat(_Q(re), _Q(im))
    return GaussRat(_Q(re), _Q(im))
