"""Truncated formal power series with exact rational coefficients.

Arithmetic is closed at a fixed truncation order; nothing here ever
touches floating point.
"""

from __future__ import annotations

from fractions import Fraction


class PowerSeries:
    """coeffs[k] is the coefficient of t^k; len(coeffs) == order + 1."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = tuple(Fraction(c) for c in coeffs)
        if not coeffs:
            raise ValueError("a series needs at least the constant term")
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, *a):
        raise AttributeError("PowerSeries is immutable")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k <= self.order else Fraction(0)

    def __eq__(self, other):
        return isinstance(other, PowerSeries) and self.coeffs == other.coeffs

    def __repr__(self):
        return f"PowerSeries({[str(c) for c in self.coeffs]})"

    @staticmethod
    def one(order: int) -> "PowerSeries":
        return PowerSeries([1] + [0] * order)

    def truncate(self, order: int) -> "PowerSeries":
        if order <= self.order:
            return PowerSeries(self.coeffs[:order + 1])
        return PowerSeries(self.coeffs + (Fraction(0),) * (order - self.order))

    def _common(self, other):
        n = min(self.order, other.order)
        return n, self.truncate(n), other.truncate(n)

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        n, a, b = self._common(other)
        return PowerSeries([a[k] + b[k] for k in range(n + 1)])

    def __sub__(self, other: "PowerSeries") -> "PowerSeries":
        n, a, b = self._common(other)
        return PowerSeries([a[k] - b[k] for k in range(n + 1)])

    def __mul__(self, other):
        if isinstance(other, PowerSeries):
            n, a, b = self._common(other)
            out = [Fraction(0)] * (n + 1)
            for i in range(n + 1):
                if a[i] == 0:
                    continue
                for j in range(n + 1 - i):
                    out[i + j] += a[i] * b[j]
            return PowerSeries(out)
        c = Fraction(other)
        return PowerSeries([c * x for x in self.coeffs])

    __rmul__ = __mul__

    def reciprocal(self) -> "PowerSeries":
        """1/self; requires a nonzero constant term."""
        if self.coeffs[0] == 0:
            raise ZeroDivisionError("reciprocal of a series with H(0)=0")
        inv0 = 1 / self.coeffs[0]
        out = [inv0] + [Fraction(0)] * self.order
        for k in range(1, self.order + 1):
            acc = Fraction(0)
            for j in range(1, k + 1):
                acc += self[j] * out[k - j]
            out[k] = -inv0 * acc
        return PowerSeries(out)

    def __truediv__(self, other: "PowerSeries") -> "PowerSeries":
        return self * other.reciprocal()

    def derivative(self) -> "PowerSeries":
        if self.order == 0:
            return PowerSeries([0])
        return PowerSeries(
            [k * self.coeffs[k] for k in range(1, self.order + 1)])

    def scale_argument(self, c) -> "PowerSeries":
        """Substitute t -> c*t."""
        c = Fraction(c)
        return PowerSeries(
            [self.coeffs[k] * c**k for k in range(self.order + 1)])

    @staticmethod
    def exp_linear(c, order: int) -> "PowerSeries":
        """exp(c*t) to the given order."""
        c = Fraction(c)
        out = [Fraction(1)]
        for k in range(1, order + 1):
            out.append(out[-1] * c / k)
        return PowerSeries(out)

    @staticmethod
    def geometric(a, order: int) -> "PowerSeries":
        """1/(1 - a*t) to the given order."""
        a = Fraction(a)
        out = [Fraction(1)]
        for _ in range(order):
            out.append(out[-1] * a)
        return PowerSeries(out)

    @staticmethod
    def linear(b, order: int) -> "PowerSeries":
        """1 + b*t to the given order."""
        return PowerSeries([1, Fraction(b)] + [0] * (order - 1)) \
            if order >= 1 else PowerSeries([1])

    def to_json(self) -> list[str]:
        from .rationals import format_rational
        return [format_rational(c) for c in self.coeffs]

    @staticmethod
    def from_json(data) -> "PowerSeries":
        from .rationals import parse_rational
        return PowerSeries([parse_rational(c) for c in data])
