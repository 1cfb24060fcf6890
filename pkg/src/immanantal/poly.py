"""Dense univariate polynomials over arbitrary-precision integers.

Coefficients are stored ascending: ``coeffs[j]`` is the coefficient of
``x**j``. The representation is normalized (no trailing zeros), so the zero
polynomial is the empty tuple and equality is structural. Degrees in this
library never exceed the graph order, so a dense vector is the right shape.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


def _normalize(coeffs: tuple[int, ...]) -> tuple[int, ...]:
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return coeffs[:n]


@dataclass(frozen=True)
class IntPolynomial:
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.coeffs and self.coeffs[-1] == 0:
            raise ValueError("coefficient vector has trailing zeros; use from_coeffs")
        for j, c in enumerate(self.coeffs):
            if not isinstance(c, int):
                raise TypeError(f"coefficient of x^{j} is {type(c).__name__}, expected int")

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int]) -> IntPolynomial:
        return cls(_normalize(tuple(int(c) for c in coeffs)))

    @classmethod
    def constant(cls, c: int) -> IntPolynomial:
        return cls((c,)) if c else cls(())

    @classmethod
    def monomial(cls, power: int, coeff: int = 1) -> IntPolynomial:
        if coeff == 0:
            return cls(())
        return cls((0,) * power + (coeff,))

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def leading_coefficient(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def coefficient(self, power: int) -> int:
        return self.coeffs[power] if 0 <= power < len(self.coeffs) else 0

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for j, c in enumerate(b):
            out[j] += c
        return IntPolynomial(_normalize(tuple(out)))

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return self + (-other)

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __mul__(self, other: IntPolynomial) -> IntPolynomial:
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial(())
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return IntPolynomial(_normalize(tuple(out)))

    def scale(self, c: int) -> IntPolynomial:
        if c == 0:
            return IntPolynomial(())
        return IntPolynomial(tuple(c * v for v in self.coeffs))

    def __rmul__(self, c: int) -> IntPolynomial:
        if not isinstance(c, int):
            return NotImplemented
        return self.scale(c)

    def shift_mul_x(self) -> IntPolynomial:
        """Multiply by x (shift all coefficients up one power)."""
        if not self.coeffs:
            return self
        return IntPolynomial((0,) + self.coeffs)

    def derivative(self) -> IntPolynomial:
        return IntPolynomial(
            _normalize(tuple(j * self.coeffs[j] for j in range(1, len(self.coeffs))))
        )

    def evaluate(self, t: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def signed_descending_coefficients(self) -> tuple[int, ...]:
        """Coefficients in the alternating-sign descending convention.

        Entry ``c_k`` satisfies ``poly = sum((-1)**k * c_k * x**(deg-k))``.
        Only a formatting convenience; everything else in the library uses
        the plain ascending convention.
        """
        d = self.degree()
        if d < 0:
            return ()
        return tuple((-1) ** k * self.coeffs[d - k] for k in range(d + 1))

    def to_strings(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_strings(cls, items: Sequence[str | int]) -> IntPolynomial:
        return cls.from_coeffs(int(c) for c in items)

    def to_json_dict(self) -> dict:
        return {"coeffs": self.to_strings()}

    @classmethod
    def from_json_dict(cls, doc: dict) -> IntPolynomial:
        if not isinstance(doc, dict) or "coeffs" not in doc:
            raise ValueError("polynomial JSON must be an object with a 'coeffs' array")
        return cls.from_strings(doc["coeffs"])

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for j in range(self.degree(), -1, -1):
            c = self.coeffs[j]
            if c == 0:
                continue
            mag = abs(c)
            if j == 0:
                body = str(mag)
            else:
                xpow = "x" if j == 1 else f"x^{j}"
                body = xpow if mag == 1 else f"{mag}{xpow}"
            terms.append(("-" if c < 0 else "+", body))
        first_sign, first_body = terms[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


ZERO = IntPolynomial(())
ONE = IntPolynomial((1,))
X = IntPolynomial((0, 1))


def poly_add(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    return a + b


def poly_sub(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    return a - b


def poly_scale(a: IntPolynomial, c: int) -> IntPolynomial:
    return a.scale(c)


def poly_shift_mul_x(a: IntPolynomial) -> IntPolynomial:
    return a.shift_mul_x()


def poly_derivative(a: IntPolynomial) -> IntPolynomial:
    return a.derivative()


def poly_eval(a: IntPolynomial, t: int) -> int:
    return a.evaluate(t)


def poly_sum(items: Iterable[IntPolynomial]) -> IntPolynomial:
    out: list[int] = []
    for p in items:
        if len(p.coeffs) > len(out):
            out.extend([0] * (len(p.coeffs) - len(out)))
        for j, c in enumerate(p.coeffs):
            out[j] += c
    return IntPolynomial.from_coeffs(out)
