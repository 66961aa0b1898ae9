"""Dense univariate polynomials with arbitrary-precision integer coefficients.

Every q-object in this package (q-integers, Gaussian binomials, q-Delannoy
numbers, cyclotomic moduli) lives in this ring.  Coefficients are stored
ascending by degree; the zero polynomial stores no coefficients at all, and
its degree is the sentinel -1.
"""

from __future__ import annotations

from collections.abc import Iterable


class ModulusError(ValueError):
    """Polynomial division attempted with a zero or non-monic divisor."""


def _trim(coeffs: list[int]) -> tuple[int, ...]:
    end = len(coeffs)
    while end and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


class IntPoly:
    """An integer polynomial, normalized so the top stored coefficient is nonzero."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        self.coeffs = _trim(list(coeffs))

    @classmethod
    def const(cls, c: int) -> IntPoly:
        return cls((c,))

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> IntPoly:
        if exponent < 0:
            raise ValueError("monomial exponent must be nonnegative")
        return cls([0] * exponent + [coeff])

    @property
    def degree(self) -> int:
        """Degree of the leading term; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == _trim([other])
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __neg__(self) -> IntPoly:
        return IntPoly([-c for c in self.coeffs])

    def __add__(self, other: IntPoly | int) -> IntPoly:
        a, b = self.coeffs, _as_coeffs(other)
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    __radd__ = __add__

    def __sub__(self, other: IntPoly | int) -> IntPoly:
        a, b = self.coeffs, _as_coeffs(other)
        out = list(a) + [0] * (len(b) - len(a))
        for i, c in enumerate(b):
            out[i] -= c
        return IntPoly(out)

    def __rsub__(self, other: int) -> IntPoly:
        return IntPoly((other,)) - self

    def __mul__(self, other: IntPoly | int) -> IntPoly:
        if isinstance(other, int):
            return IntPoly([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, c in enumerate(a):
            if c:
                for j, d in enumerate(b):
                    out[i + j] += c * d
        return IntPoly(out)

    __rmul__ = __mul__

    def shift(self, exponent: int) -> IntPoly:
        """Multiply by q**exponent."""
        if exponent < 0:
            raise ValueError("shift exponent must be nonnegative")
        if not self.coeffs:
            return self
        return IntPoly((0,) * exponent + self.coeffs)

    def divrem(self, divisor: IntPoly) -> tuple[IntPoly, IntPoly]:
        """Quotient and remainder by a monic divisor, exact over the integers.

        Raises ModulusError unless the divisor is nonzero with leading
        coefficient 1; every modulus in play (Phi_n, q-1, q^n-1) is monic,
        which keeps the division integral.
        """
        m = divisor.coeffs
        if not m:
            raise ModulusError("division by the zero polynomial")
        if m[-1] != 1:
            raise ModulusError(f"divisor is not monic (leading coefficient {m[-1]})")
        dm = len(m) - 1
        r = list(self.coeffs)
        if len(r) <= dm:
            return IntPoly(), self
        quot = [0] * (len(r) - dm)
        for i in range(len(r) - 1, dm - 1, -1):
            c = r[i]
            if c:
                quot[i - dm] = c
                for j in range(dm):
                    r[i - dm + j] -= c * m[j]
                r[i] = 0
        return IntPoly(quot), IntPoly(r[:dm])

    def evaluate(self, x: int) -> int:
        """Horner evaluation at an integer point."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def to_text(self) -> str:
        """Canonical report form, terms ascending: "1 + 2*q + 2*q^2"."""
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            elif i == 1:
                body = "q" if mag == 1 else f"{mag}*q"
            else:
                body = f"q^{i}" if mag == 1 else f"{mag}*q^{i}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append((" + " if c > 0 else " - ") + body)
        return "".join(parts)

    def to_json_coeffs(self) -> list[str]:
        """JSON form: decimal coefficient strings ascending by degree."""
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json_coeffs(cls, items: Iterable[str]) -> IntPoly:
        return cls(int(s) for s in items)

    def __repr__(self) -> str:
        return f"IntPoly('{self.to_text()}')"


def _as_coeffs(value: IntPoly | int) -> tuple[int, ...]:
    if isinstance(value, IntPoly):
        return value.coeffs
    return _trim([value])


ZERO = IntPoly()
ONE = IntPoly((1,))
Q = IntPoly((0, 1))
