"""Exact coefficient rings used by the truncated series engine.

Two rings are supported: the rationals (Fraction-backed, arbitrary
precision) and dense polynomials in the occurrence marker ``t`` with
rational coefficients.  Counting results are always integral; rationals
appear only transiently inside series division and Newton steps.
"""

from __future__ import annotations

from fractions import Fraction

_SCALARS = (int, Fraction)


class TPoly:
    """Dense polynomial in the marker variable t, trailing zeros stripped.

    The coefficient of t^j counts objects carrying exactly j marked
    occurrences, so in counting contexts every coefficient is a
    nonnegative integer.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        if isinstance(coeffs, _SCALARS):
            coeffs = (coeffs,)
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coefficient(self, j: int):
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, TPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, _SCALARS):
            return self.coeffs == TPoly(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("TPoly", self.coeffs))

    def __neg__(self) -> "TPoly":
        return TPoly(tuple(-c for c in self.coeffs))

    def __add__(self, other):
        if isinstance(other, _SCALARS):
            other = TPoly(other)
        if not isinstance(other, TPoly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return TPoly(tuple(self.coefficient(j) + other.coefficient(j) for j in range(n)))

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, _SCALARS):
            other = TPoly(other)
        if not isinstance(other, TPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, _SCALARS):
            return TPoly(tuple(c * other for c in self.coeffs))
        if not isinstance(other, TPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return TPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return TPoly(tuple(out))

    __rmul__ = __mul__

    def __call__(self, t_value):
        """Evaluate at a scalar t value (Horner)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t_value + c
        return acc

    def shifted(self) -> "TPoly":
        """Multiply by t (used for marked automaton edges)."""
        if not self.coeffs:
            return self
        return TPoly((0,) + self.coeffs)

    def map_coefficients(self, fn) -> "TPoly":
        return TPoly(tuple(fn(c) for c in self.coeffs))

    def __repr__(self) -> str:
        return f"TPoly({list(self.coeffs)!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if j == 0:
                parts.append(str(c))
            elif j == 1:
                parts.append("t" if c == 1 else f"{c}*t")
            else:
                parts.append(f"t^{j}" if c == 1 else f"{c}*t^{j}")
        return " + ".join(parts)


T = TPoly((0, 1))


class RationalRing:
    """Coefficient ring of exact rationals."""

    name = "Q"
    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, x):
        if isinstance(x, _SCALARS):
            return x
        raise TypeError(f"cannot coerce {x!r} into {self.name}")

    def from_int(self, n: int):
        return Fraction(n)

    def is_unit(self, x) -> bool:
        return x != 0

    def inv(self, x):
        return Fraction(1) / Fraction(x)


class TPolyRing:
    """Coefficient ring of marker polynomials with rational coefficients."""

    name = "Q[t]"
    zero = TPoly()
    one = TPoly(1)

    def coerce(self, x):
        if isinstance(x, TPoly):
            return x
        if isinstance(x, _SCALARS):
            return TPoly(x)
        raise TypeError(f"cannot coerce {x!r} into {self.name}")

    def from_int(self, n: int):
        return TPoly(n)

    def is_unit(self, x) -> bool:
        return x.degree == 0 and x.coeffs[0] != 0

    def inv(self, x):
        if not self.is_unit(x):
            raise ZeroDivisionError(f"{x!r} is not a unit in {self.name}")
        return TPoly(Fraction(1) / Fraction(x.coeffs[0]))


QQ = RationalRing()
QT = TPolyRing()
