"""Exact arithmetic shared by every other module.

Rationals are stdlib ``fractions.Fraction`` values: arbitrary precision,
always in lowest terms, positive denominator.  Polynomials are dense integer
coefficient tuples indexed by degree.  A Hilbert series is a polynomial
numerator over ``(1 - t**base)**pole_order``; ``base`` is 1 for standard
graded modules and equals the generator degree for modules whose grading is
supported on one congruence class.  No floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

Rational = Fraction

__all__ = ["Rational", "Polynomial", "HilbertSeries"]


@dataclass(frozen=True)
class Polynomial:
    """Integer polynomial in one variable; ``coefficients[n]`` is the t^n term."""

    coefficients: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        coeffs = tuple(self.coefficients)
        for c in coeffs:
            if not isinstance(c, int):
                raise TypeError(f"integer coefficient required, got {c!r}")
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls(())

    @classmethod
    def one(cls) -> "Polynomial":
        return cls((1,))

    @classmethod
    def monomial(cls, coefficient: int, degree: int) -> "Polynomial":
        if degree < 0:
            raise ValueError("monomial degree must be nonnegative")
        return cls((0,) * degree + (coefficient,))

    @classmethod
    def geometric(cls, length: int) -> "Polynomial":
        """1 + t + ... + t**(length-1)."""
        if length < 0:
            raise ValueError("length must be nonnegative")
        return cls((1,) * length)

    @property
    def degree(self) -> int:
        """Degree, with -1 as the sentinel for the zero polynomial."""
        return len(self.coefficients) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    def coefficient(self, n: int) -> int:
        if 0 <= n < len(self.coefficients):
            return self.coefficients[n]
        return 0

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for n, c in enumerate(b):
            out[n] += c
        return Polynomial(tuple(out))

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return Polynomial(tuple(other * c for c in self.coefficients))
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return Polynomial.zero()
        out = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for n, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for m, b in enumerate(other.coefficients):
                out[n + m] += a * b
        return Polynomial(tuple(out))

    __rmul__ = __mul__

    def shift(self, l: int) -> "Polynomial":
        """Multiply by t**l.  Negative l requires divisibility by t**(-l)."""
        if l == 0 or self.is_zero:
            return self
        if l > 0:
            return Polynomial((0,) * l + self.coefficients)
        return self._shift_down(-l)

    def _shift_down(self, m: int) -> "Polynomial":
        if any(c != 0 for c in self.coefficients[:m]):
            raise ValueError(
                f"shift by t**(-{m}) would create negative-degree terms"
            )
        return Polynomial(self.coefficients[m:])

    def reflected(self) -> "Polynomial":
        """t**degree * p(1/t): the coefficient sequence reversed."""
        return Polynomial(tuple(reversed(self.coefficients)))

    def __call__(self, x):
        value = 0
        for c in reversed(self.coefficients):
            value = value * x + c
        return value

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for n, c in enumerate(self.coefficients):
            if c == 0:
                continue
            if n == 0:
                parts.append(str(c))
            else:
                coeff = "" if c == 1 else ("-" if c == -1 else str(c))
                power = "t" if n == 1 else f"t^{n}"
                parts.append(f"{coeff}{power}")
        return " + ".join(parts).replace("+ -", "- ")


def _divide_one_minus_power(poly: Polynomial, base: int) -> Polynomial | None:
    """Quotient of poly by (1 - t**base), or None when not divisible."""
    if poly.is_zero:
        return poly
    coeffs = poly.coefficients
    quotient = [0] * len(coeffs)
    for n, c in enumerate(coeffs):
        prev = quotient[n - base] if n >= base else 0
        quotient[n] = c + prev
    if any(quotient[n] != 0 for n in range(max(0, len(coeffs) - base), len(coeffs))):
        return None
    return Polynomial(tuple(quotient[: max(0, len(coeffs) - base)]))


@dataclass(frozen=True)
class HilbertSeries:
    """Formal series numerator / (1 - t**base)**pole_order.

    Canonical form: the numerator is not divisible by (1 - t**base) unless it
    is zero, and the zero series is stored with pole order 0 and base 1.
    Coefficient extraction agrees with long division of the numerator by the
    expanded denominator.
    """

    numerator: Polynomial
    pole_order: int
    base: int = 1

    def __post_init__(self) -> None:
        if self.pole_order < 0:
            raise ValueError("pole order must be nonnegative")
        if self.base < 1:
            raise ValueError("base must be at least 1")
        num, pole, base = self.numerator, self.pole_order, self.base
        if num.is_zero:
            num, pole, base = Polynomial.zero(), 0, 1
        else:
            while pole > 0:
                reduced = _divide_one_minus_power(num, base)
                if reduced is None:
                    break
                num, pole = reduced, pole - 1
            if pole == 0:
                base = 1
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "pole_order", pole)
        object.__setattr__(self, "base", base)

    @classmethod
    def zero(cls) -> "HilbertSeries":
        return cls(Polynomial.zero(), 0)

    def coefficient(self, n: int) -> int:
        """dim of the degree-n piece, by formal expansion of the denominator."""
        if n < 0:
            return 0
        d, b = self.pole_order, self.base
        if d == 0:
            return self.numerator.coefficient(n)
        total = 0
        for m, c in enumerate(self.numerator.coefficients):
            if c == 0 or m > n or (n - m) % b != 0:
                continue
            total += c * comb((n - m) // b + d - 1, d - 1)
        return total

    def coefficients(self, upto: int) -> list[int]:
        if upto < 0:
            raise ValueError("upto must be nonnegative")
        return [self.coefficient(n) for n in range(upto + 1)]

    def shift(self, l: int) -> "HilbertSeries":
        """t**l times this series; negative l must not create degree < 0 terms."""
        return HilbertSeries(self.numerator.shift(l), self.pole_order, self.base)

    def scale(self, c: int) -> "HilbertSeries":
        return HilbertSeries(self.numerator * c, self.pole_order, self.base)

    def dual(self) -> "HilbertSeries":
        """(-1)**pole_order * h(1/t), rewritten over the same denominator.

        This is the graded dual rule: the numerator is reversed and shifted so
        that h and dual(h) share the denominator.  Applying it twice returns
        the original series.
        """
        if self.pole_order < 1:
            raise ValueError("dual needs pole order at least 1")
        if self.numerator.is_zero:
            return self
        top = self.base * self.pole_order
        num = self.numerator.reflected().shift(top - self.numerator.degree)
        return HilbertSeries(num, self.pole_order, self.base)

    def _aligned(self, other: "HilbertSeries") -> tuple[Polynomial, Polynomial, int, int]:
        if self.numerator.is_zero:
            return Polynomial.zero(), other.numerator, other.pole_order, other.base
        if other.numerator.is_zero:
            return self.numerator, Polynomial.zero(), self.pole_order, self.base
        if self.base != other.base:
            raise ValueError("series with different bases cannot be combined")
        base = self.base
        pole = max(self.pole_order, other.pole_order)
        one_minus = Polynomial((1,) + (0,) * (base - 1) + (-1,))
        a, b = self.numerator, other.numerator
        for _ in range(pole - self.pole_order):
            a = a * one_minus
        for _ in range(pole - other.pole_order):
            b = b * one_minus
        return a, b, pole, base

    def __add__(self, other: "HilbertSeries") -> "HilbertSeries":
        a, b, pole, base = self._aligned(other)
        return HilbertSeries(a + b, pole, base)

    def __sub__(self, other: "HilbertSeries") -> "HilbertSeries":
        a, b, pole, base = self._aligned(other)
        return HilbertSeries(a - b, pole, base)

    def multiplicity(self) -> int:
        """Numerator evaluated at 1: the leading-order density of the series."""
        return self.numerator(1)

    def __str__(self) -> str:
        t_power = "t" if self.base == 1 else f"t^{self.base}"
        return f"({self.numerator})/(1 - {t_power})^{self.pole_order}"
