"""Exact arithmetic kernel: polynomials, truncated power series in t, and
bivariate series in (x, t) used for coefficient extraction.

Every coefficient is a ``fractions.Fraction``; nothing is ever rounded.  A
:class:`TruncSeries` carries an explicit truncation order N and exactly the
coefficients of t^0..t^N.  Binary operations align to the smaller of the two
orders, so a coefficient is never reported unless it is exactly determined.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]

__all__ = [
    "BiSeries",
    "Poly",
    "TruncSeries",
    "XOrderExceededError",
    "ZeroConstantTermError",
    "binomial",
    "expand_rational",
]


class ZeroConstantTermError(ZeroDivisionError):
    """Inversion of a series whose constant term vanishes."""


class XOrderExceededError(IndexError):
    """An x-coefficient beyond the stored truncation was requested.

    The caller must rebuild the bivariate series with a larger x-order; the
    missing coefficient is not guessable from the stored data.
    """


def binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k), with C(n, k) = 0 for k < 0 or k > n."""
    if n < 0:
        raise ValueError("binomial requires n >= 0")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def _fmt(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


class Poly:
    """Polynomial in t with exact rational coefficients.

    Trailing zero coefficients are trimmed on construction; the zero
    polynomial keeps an empty coefficient tuple and its degree is ``None``
    (a distinguished sentinel, never -1).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()) -> None:
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def one(cls) -> Poly:
        return cls([1])

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1) -> Poly:
        """The polynomial c * t^k."""
        if k < 0:
            raise ValueError("monomial exponent must be nonnegative")
        return cls([0] * k + [c])

    @property
    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def constant_term(self) -> Fraction:
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def as_series(self, order: int) -> TruncSeries:
        """Reinterpret as a truncated series.

        Exact for every order: coefficients of a polynomial above its degree
        are genuinely zero.
        """
        return TruncSeries(self.coeffs[: order + 1], order)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __neg__(self) -> Poly:
        return Poly([-c for c in self.coeffs])

    def __add__(self, other: Poly | Scalar) -> Poly:
        if isinstance(other, (int, Fraction)):
            other = Poly([other])
        if not isinstance(other, Poly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [Fraction(0)] * (n - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            a[i] += c
        return Poly(a)

    __radd__ = __add__

    def __sub__(self, other: Poly | Scalar) -> Poly:
        return self + (-other if isinstance(other, Poly) else -Fraction(other))

    def __rsub__(self, other: Scalar) -> Poly:
        return (-self) + other

    def __mul__(self, other: Poly | Scalar) -> Poly:
        if isinstance(other, (int, Fraction)):
            return Poly([c * other for c in self.coeffs])
        if not isinstance(other, Poly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Poly:
        if k < 0:
            raise ValueError("polynomial powers must be nonnegative")
        result = Poly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __repr__(self) -> str:
        return f"Poly([{', '.join(_fmt(c) for c in self.coeffs)}])"


class TruncSeries:
    """Power series in t truncated at an explicit order.

    Stores exactly ``order + 1`` coefficients (indices 0..order).  Immutable;
    all operations return fresh instances and are safe to share across
    threads.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable[Scalar] = (), order: int | None = None) -> None:
        cs = [Fraction(c) for c in coeffs]
        if order is None:
            order = max(len(cs) - 1, 0)
        if order < 0:
            raise ValueError("truncation order must be nonnegative")
        if len(cs) < order + 1:
            cs.extend([Fraction(0)] * (order + 1 - len(cs)))
        else:
            del cs[order + 1 :]
        self.order: int = order
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def zero(cls, order: int) -> TruncSeries:
        return cls((), order)

    @classmethod
    def one(cls, order: int) -> TruncSeries:
        return cls((1,), order)

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __getitem__(self, k: int) -> Fraction:
        if not 0 <= k <= self.order:
            raise IndexError(f"coefficient t^{k} is outside truncation order {self.order}")
        return self.coeffs[k]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, TruncSeries):
            return self.order == other.order and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def truncated(self, order: int) -> TruncSeries:
        """Drop coefficients above ``order`` (which must not exceed self.order)."""
        if order > self.order:
            raise ValueError("cannot raise the truncation order of a series")
        if order == self.order:
            return self
        return TruncSeries(self.coeffs[: order + 1], order)

    def __neg__(self) -> TruncSeries:
        return TruncSeries([-c for c in self.coeffs], self.order)

    def __add__(self, other: TruncSeries | Scalar) -> TruncSeries:
        if isinstance(other, (int, Fraction)):
            cs = list(self.coeffs)
            cs[0] += other
            return TruncSeries(cs, self.order)
        if not isinstance(other, TruncSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return TruncSeries([self.coeffs[k] + other.coeffs[k] for k in range(n + 1)], n)

    __radd__ = __add__

    def __sub__(self, other: TruncSeries | Scalar) -> TruncSeries:
        return self + (-other if isinstance(other, TruncSeries) else -Fraction(other))

    def __rsub__(self, other: Scalar) -> TruncSeries:
        return (-self) + other

    def __mul__(self, other: TruncSeries | Scalar) -> TruncSeries:
        if isinstance(other, (int, Fraction)):
            return TruncSeries([c * other for c in self.coeffs], self.order)
        if not isinstance(other, TruncSeries):
            return NotImplemented
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            ai = a[i]
            if not ai:
                continue
            for j in range(n + 1 - i):
                bj = b[j]
                if bj:
                    out[i + j] += ai * bj
        return TruncSeries(out, n)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> TruncSeries:
        if k < 0:
            raise ValueError("series powers must be nonnegative")
        result = TruncSeries.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def inv(self) -> TruncSeries:
        """Multiplicative inverse: ``self * self.inv() == 1`` up to the order.

        Forward recurrence c_k = (delta_{k0} - sum_{j=1..k} a_j c_{k-j}) / a_0.
        """
        a = self.coeffs
        if a[0] == 0:
            raise ZeroConstantTermError("cannot invert a series with zero constant term")
        inv0 = 1 / a[0]
        out = [inv0]
        for k in range(1, self.order + 1):
            acc = Fraction(0)
            for j in range(1, k + 1):
                if a[j]:
                    acc += a[j] * out[k - j]
            out.append(-acc * inv0)
        return TruncSeries(out, self.order)

    def shift(self, m: int) -> TruncSeries:
        """Multiply by t^m, keeping the truncation order."""
        if m < 0:
            raise ValueError("shift must be nonnegative")
        if m == 0:
            return self
        keep = max(self.order + 1 - m, 0)
        return TruncSeries([Fraction(0)] * min(m, self.order + 1) + list(self.coeffs[:keep]), self.order)

    def __repr__(self) -> str:
        return f"TruncSeries([{', '.join(_fmt(c) for c in self.coeffs)}], order={self.order})"


def expand_rational(num: Poly, den: Poly, order: int) -> TruncSeries:
    """Taylor expansion of num/den at t = 0, exact up to ``order``.

    The denominator must not vanish at t = 0.
    """
    if den.constant_term == 0:
        raise ZeroConstantTermError("denominator vanishes at t = 0")
    return num.as_series(order) * den.as_series(order).inv()


class BiSeries:
    """Series in an auxiliary variable x whose coefficients are series in t.

    The x^m coefficient sits at index m; all inner series share one t-order
    (the constructor aligns to the smallest).  Used for MacDonald-style
    coefficient extraction.
    """

    __slots__ = ("x_order", "t_order", "coeffs")

    def __init__(self, coeffs: Sequence[TruncSeries]) -> None:
        if not coeffs:
            raise ValueError("a BiSeries needs at least the x^0 coefficient")
        t_order = min(c.order for c in coeffs)
        self.coeffs: tuple[TruncSeries, ...] = tuple(c.truncated(t_order) for c in coeffs)
        self.x_order: int = len(coeffs) - 1
        self.t_order: int = t_order

    @classmethod
    def of_polys(cls, polys: Sequence[Poly | Scalar], x_order: int, t_order: int) -> BiSeries:
        """Exact embedding of sum_m polys[m](t) * x^m, zero-padded in x.

        Entries beyond ``x_order`` are discarded (x-truncation); missing
        entries are zero.
        """
        rows = []
        for m in range(x_order + 1):
            p = polys[m] if m < len(polys) else Poly()
            if not isinstance(p, Poly):
                p = Poly([p])
            rows.append(p.as_series(t_order))
        return cls(rows)

    @classmethod
    def one(cls, x_order: int, t_order: int) -> BiSeries:
        return cls.of_polys([Poly.one()], x_order, t_order)

    def x_coeff(self, m: int) -> TruncSeries:
        """The t-series multiplying x^m; loud failure past the truncation."""
        if m < 0:
            raise ValueError("x-power must be nonnegative")
        if m > self.x_order:
            raise XOrderExceededError(
                f"x^{m} requested but the series is truncated at x^{self.x_order}"
            )
        return self.coeffs[m]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, BiSeries):
            return (
                self.x_order == other.x_order
                and self.t_order == other.t_order
                and self.coeffs == other.coeffs
            )
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.x_order, self.t_order, self.coeffs))

    def __mul__(self, other: BiSeries) -> BiSeries:
        if not isinstance(other, BiSeries):
            return NotImplemented
        n = min(self.x_order, other.x_order)
        t_ord = min(self.t_order, other.t_order)
        out = [TruncSeries.zero(t_ord) for _ in range(n + 1)]
        for i in range(n + 1):
            a = self.coeffs[i]
            if a.is_zero:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if not b.is_zero:
                    out[i + j] = out[i + j] + a * b
        return BiSeries(out)

    def inv(self) -> BiSeries:
        """Multiplicative inverse in x; the x^0 coefficient must itself be
        invertible as a t-series."""
        c0 = self.coeffs[0].inv()
        out = [c0]
        for m in range(1, self.x_order + 1):
            acc = TruncSeries.zero(self.t_order)
            for j in range(1, m + 1):
                a = self.coeffs[j]
                if not a.is_zero:
                    acc = acc + a * out[m - j]
            out.append((-acc) * c0)
        return BiSeries(out)

    def __repr__(self) -> str:
        return f"BiSeries(x_order={self.x_order}, t_order={self.t_order})"
