"""Truncated formal power series in z with exact coefficients.

A series carries an explicit truncation order N, meaning it is known
modulo z^N.  Arithmetic never reads beyond the order, and binary
operations return the minimum of the input orders, so precision loss is
always visible in the result type.  Algebraic equations P(z, S) = 0 with
a simple root at the origin are solved by Newton iteration; a slower
undetermined-coefficients solver is kept as an independent cross-check.
"""

from __future__ import annotations

from fractions import Fraction

from .rings import QQ, QT, TPoly


class SeriesError(Exception):
    pass


class RingMismatch(SeriesError):
    pass


class DivisionByNonUnit(SeriesError):
    pass


class NotARoot(SeriesError):
    pass


class SingularRoot(SeriesError):
    pass


class ZSeries:
    """Power series known modulo z^order, coefficients in a fixed ring."""

    __slots__ = ("coeffs", "order", "ring")

    def __init__(self, coeffs, order, ring=QQ):
        if order < 1:
            raise ValueError("truncation order must be >= 1")
        cs = [ring.coerce(c) for c in coeffs[:order]]
        cs.extend(ring.zero for _ in range(order - len(cs)))
        self.coeffs = tuple(cs)
        self.order = order
        self.ring = ring

    # -- constructors -------------------------------------------------

    @classmethod
    def from_poly(cls, coeffs, order, ring=QQ):
        return cls(list(coeffs), order, ring)

    @classmethod
    def zero(cls, order, ring=QQ):
        return cls((), order, ring)

    @classmethod
    def one(cls, order, ring=QQ):
        return cls((ring.one,), order, ring)

    @classmethod
    def z(cls, order, ring=QQ):
        return cls((ring.zero, ring.one), order, ring)

    # -- basics -------------------------------------------------------

    def coefficient(self, m: int):
        if m >= self.order:
            raise IndexError(f"coefficient z^{m} beyond truncation order {self.order}")
        return self.coeffs[m]

    def valuation(self):
        """Index of the first nonzero coefficient, or None if zero mod z^N."""
        for i, c in enumerate(self.coeffs):
            if c != self.ring.zero and c != 0:
                return i
        return None

    def is_zero(self) -> bool:
        return self.valuation() is None

    def _check(self, other: "ZSeries"):
        if self.ring is not other.ring:
            raise RingMismatch(f"{self.ring.name} vs {other.ring.name}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, ZSeries):
            return NotImplemented
        return (
            self.ring is other.ring
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.coeffs, self.order, id(self.ring)))

    def agrees_with(self, other: "ZSeries") -> bool:
        """Coefficientwise equality up to the smaller order."""
        self._check(other)
        n = min(self.order, other.order)
        return self.coeffs[:n] == other.coeffs[:n]

    # -- ring operations ----------------------------------------------

    def __neg__(self):
        return ZSeries(tuple(-c for c in self.coeffs), self.order, self.ring)

    def __add__(self, other):
        if not isinstance(other, ZSeries):
            other = ZSeries((other,), self.order, self.ring)
        self._check(other)
        n = min(self.order, other.order)
        return ZSeries(
            tuple(a + b for a, b in zip(self.coeffs[:n], other.coeffs[:n])),
            n,
            self.ring,
        )

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, ZSeries):
            other = ZSeries((other,), self.order, self.ring)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, ZSeries):
            scalar = self.ring.coerce(other)
            return ZSeries(tuple(c * scalar for c in self.coeffs), self.order, self.ring)
        self._check(other)
        n = min(self.order, other.order)
        zero = self.ring.zero
        out = [zero] * n
        for i in range(n):
            a = self.coeffs[i]
            if a == zero:
                continue
            for j in range(n - i):
                b = other.coeffs[j]
                if b != zero:
                    out[i + j] = out[i + j] + a * b
        return ZSeries(tuple(out), n, self.ring)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers not supported; use inverse()")
        result = ZSeries.one(self.order, self.ring)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> "ZSeries":
        """Multiplicative inverse; requires a unit constant term."""
        c0 = self.coeffs[0]
        if not self.ring.is_unit(c0):
            raise DivisionByNonUnit("constant term is not a unit")
        inv0 = self.ring.inv(c0)
        out = [inv0]
        zero = self.ring.zero
        for n in range(1, self.order):
            acc = zero
            for k in range(1, n + 1):
                b = self.coeffs[k]
                if b != zero:
                    acc = acc + b * out[n - k]
            out.append(-(inv0 * acc))
        return ZSeries(tuple(out), self.order, self.ring)

    def __truediv__(self, other):
        if not isinstance(other, ZSeries):
            other = ZSeries((other,), self.order, self.ring)
        return divide(self, other)

    # -- shape operations ---------------------------------------------

    def truncate(self, order: int) -> "ZSeries":
        if order > self.order:
            raise ValueError("cannot extend a series by truncation")
        return ZSeries(self.coeffs[:order], order, self.ring)

    def extend_zero(self, order: int) -> "ZSeries":
        """Pad with zero coefficients (used internally by the solvers)."""
        if order < self.order:
            return self.truncate(order)
        return ZSeries(self.coeffs, order, self.ring)

    def shift(self, k: int) -> "ZSeries":
        """Multiply by z^k; the result is known modulo z^(order + k)."""
        if k < 0:
            raise ValueError("negative shift; use divide() with a z power")
        zero = self.ring.zero
        return ZSeries((zero,) * k + self.coeffs, self.order + k, self.ring)

    def differentiate(self) -> "ZSeries":
        """Formal d/dz; truncation order drops by one."""
        if self.order < 2:
            raise ValueError("cannot differentiate below order 2")
        out = tuple(self.coeffs[i] * i for i in range(1, self.order))
        return ZSeries(out, self.order - 1, self.ring)

    def compress_even(self) -> "ZSeries":
        """Substitute z^2 -> z; every odd coefficient must vanish."""
        for i in range(1, self.order, 2):
            if self.coeffs[i] != self.ring.zero and self.coeffs[i] != 0:
                raise SeriesError(f"odd coefficient z^{i} is nonzero")
        out = self.coeffs[0::2]
        return ZSeries(out, (self.order + 1) // 2, self.ring)

    def evaluate_t(self, t_value) -> "ZSeries":
        """Evaluate marker-polynomial coefficients at a rational t."""
        if self.ring is not QT:
            raise RingMismatch("evaluate_t requires the Q[t] coefficient ring")
        t_value = Fraction(t_value)
        return ZSeries(tuple(c(t_value) for c in self.coeffs), self.order, QQ)

    # -- output -------------------------------------------------------

    def integer_coefficients(self):
        """Coefficients as ints (or int-TPolys), asserting integrality."""
        out = []
        for c in self.coeffs:
            if isinstance(c, TPoly):
                out.append(c.map_coefficients(_as_int))
            else:
                out.append(_as_int(c))
        return out

    def __repr__(self):
        shown = ", ".join(str(c) for c in self.coeffs[:8])
        tail = ", ..." if self.order > 8 else ""
        return f"ZSeries([{shown}{tail}] mod z^{self.order}, ring={self.ring.name})"


def _as_int(c):
    f = Fraction(c)
    if f.denominator != 1:
        raise SeriesError(f"coefficient {c} is not an integer")
    return f.numerator


def divide(a: ZSeries, b: ZSeries) -> ZSeries:
    """Exact series division.

    Either b has a unit constant term, or a and b share the valuation of
    b, in which case the common z power is stripped from both before the
    ordinary division (the order drops by that valuation).
    """
    a._check(b)
    if b.ring.is_unit(b.coeffs[0]):
        n = min(a.order, b.order)
        return a.truncate(n) * b.truncate(n).inverse()
    v = b.valuation()
    if v is None:
        raise DivisionByNonUnit("division by the zero series")
    av = a.valuation()
    if av is not None and av < v:
        raise DivisionByNonUnit(f"numerator valuation {av} below denominator valuation {v}")
    n = min(a.order, b.order) - v
    if n < 1:
        raise DivisionByNonUnit("no coefficients left after valuation stripping")
    a2 = ZSeries(a.coeffs[v:], n, a.ring)
    b2 = ZSeries(b.coeffs[v:], n, b.ring)
    if not b2.ring.is_unit(b2.coeffs[0]):
        raise DivisionByNonUnit("denominator not a unit after valuation stripping")
    return a2 * b2.inverse()


class AlgEquation:
    """Polynomial equation sum_i c_i(z) S^i = 0 with exact z-polynomial
    coefficients; c_d must not be identically zero."""

    __slots__ = ("coeff_polys", "ring")

    def __init__(self, coeff_polys, ring=QQ):
        polys = [tuple(ring.coerce(c) for c in p) for p in coeff_polys]
        if not polys or all(c == ring.zero for c in polys[-1]):
            raise ValueError("leading coefficient is identically zero")
        self.coeff_polys = tuple(polys)
        self.ring = ring

    @property
    def degree(self) -> int:
        return len(self.coeff_polys) - 1

    def coefficient_series(self, i: int, order: int) -> ZSeries:
        return ZSeries.from_poly(self.coeff_polys[i], order, self.ring)

    def apply(self, s: ZSeries) -> ZSeries:
        """Residual sum_i c_i(z) s^i, truncated at s.order (Horner in S)."""
        if s.ring is not self.ring:
            raise RingMismatch(f"{s.ring.name} vs {self.ring.name}")
        acc = self.coefficient_series(self.degree, s.order)
        for i in range(self.degree - 1, -1, -1):
            acc = acc * s + self.coefficient_series(i, s.order)
        return acc

    def derivative(self) -> "AlgEquation":
        """Formal derivative with respect to S."""
        polys = [
            tuple(c * i for c in p)
            for i, p in enumerate(self.coeff_polys)
            if i >= 1
        ]
        return AlgEquation(polys, self.ring)

    def _constant(self, i: int):
        p = self.coeff_polys[i]
        return p[0] if p else self.ring.zero


def residual(eq: AlgEquation, s: ZSeries) -> ZSeries:
    return eq.apply(s)


def _check_simple_root(eq: AlgEquation, s0):
    ring = eq.ring
    value = ring.zero
    deriv = ring.zero
    power = ring.one
    for i in range(eq.degree + 1):
        c = eq._constant(i)
        value = value + c * power
        if i + 1 <= eq.degree:
            deriv = deriv + eq._constant(i + 1) * power * (i + 1)
        power = power * s0
    if value != ring.zero and value != 0:
        raise NotARoot(f"P(0, {s0!r}) = {value!r} != 0")
    if not ring.is_unit(deriv):
        raise SingularRoot(f"dP/dS(0, {s0!r}) = {deriv!r} is not a unit")


def solve_algebraic(eq: AlgEquation, s0, order: int, schedule: str = "doubling") -> ZSeries:
    """Unique series root with constant term s0, by Newton iteration.

    The root must be simple at the origin.  schedule="doubling" doubles
    the working order each step; schedule="linear" raises it by one, and
    both must produce identical coefficients.
    """
    if schedule not in ("doubling", "linear"):
        raise ValueError(f"unknown schedule {schedule!r}")
    ring = eq.ring
    s0 = ring.coerce(s0)
    _check_simple_root(eq, s0)
    deq = eq.derivative()
    s = ZSeries((s0,), 1, ring)
    while s.order < order:
        target = min(2 * s.order, order) if schedule == "doubling" else s.order + 1
        s = s.extend_zero(target)
        num = eq.apply(s)
        den = deq.apply(s)
        s = s - num * den.inverse()
    return s


def solve_undetermined(eq: AlgEquation, s0, order: int) -> ZSeries:
    """Order-by-order coefficient extraction; independent of Newton.

    O(N) residual evaluations, so only suitable for moderate orders; the
    solvers must agree coefficient-for-coefficient.
    """
    ring = eq.ring
    s0 = ring.coerce(s0)
    _check_simple_root(eq, s0)
    d0 = ring.zero
    power = ring.one
    for i in range(1, eq.degree + 1):
        d0 = d0 + eq._constant(i) * power * i
        power = power * s0
    inv_d0 = ring.inv(d0)
    coeffs = [s0]
    for n in range(1, order):
        probe = ZSeries(tuple(coeffs) + (ring.zero,), n + 1, ring)
        r = eq.apply(probe).coeffs[n]
        coeffs.append(-(inv_d0 * r))
    return ZSeries(tuple(coeffs), order, ring)
