"""Integer polynomials for root finding.

Coefficients are stored lowest degree first with no trailing zeros, so
the representation is canonical and equality means equality of
polynomials.  Evaluation happens either over the integers modulo m or
inside digit-expansion arithmetic via Horner's rule.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .digits import DigitExpansion
from .errors import ParseError

_TERM_RE = re.compile(r"^([+-]?\d*)(x(?:\^(\d+))?)?$")


@dataclass(frozen=True)
class IntPolynomial:
    """An integer polynomial; coefficients[i] multiplies x**i."""

    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(int(c) for c in self.coefficients)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def is_zero_mod(self, m: int) -> bool:
        return all(c % m == 0 for c in self.coefficients)

    def evaluate_mod(self, x: int, m: int) -> int:
        """Horner evaluation over the integers modulo m."""
        acc = 0
        for c in reversed(self.coefficients):
            acc = (acc * x + c) % m
        return acc

    def evaluate_expansion(self, x: DigitExpansion) -> DigitExpansion:
        """Horner evaluation in digit arithmetic, at the precision of x."""
        acc = DigitExpansion.from_integer(0, x.base, x.precision)
        for c in reversed(self.coefficients):
            acc = acc * x + DigitExpansion.from_integer(c, x.base, x.precision)
        return acc

    def derivative(self) -> IntPolynomial:
        return IntPolynomial(
            tuple(i * c for i, c in enumerate(self.coefficients) if i > 0)
        )

    @classmethod
    def from_string(cls, text: str) -> IntPolynomial:
        """Parse either a coefficient list or a term expression.

        "3,80,-98,-86,-20,1" lists coefficients lowest degree first.
        "x^5-20x^4-86x^3-98x^2+80x+3" spells the terms out; powers may
        repeat and are summed.
        """
        body = re.sub(r"\s+", "", text)
        if not body:
            raise ParseError("empty polynomial")
        if "," in body:
            try:
                return cls(tuple(int(tok) for tok in body.split(",")))
            except ValueError:
                raise ParseError(f"bad coefficient list {text!r}") from None
        chunks = re.findall(r"[+-]?[^+-]+", body)
        if "".join(chunks) != body:
            raise ParseError(f"cannot split {text!r} into terms")
        powers: dict[int, int] = {}
        for chunk in chunks:
            m = _TERM_RE.match(chunk)
            if not m or chunk in ("", "+", "-"):
                raise ParseError(f"bad term {chunk!r} in {text!r}")
            coeff_part, x_part, power_part = m.groups()
            if x_part is None:
                if not coeff_part.lstrip("+-"):
                    raise ParseError(f"bad term {chunk!r} in {text!r}")
                coeff = int(coeff_part)
                power = 0
            else:
                if coeff_part in ("", "+"):
                    coeff = 1
                elif coeff_part == "-":
                    coeff = -1
                else:
                    coeff = int(coeff_part)
                power = int(power_part) if power_part else 1
            powers[power] = powers.get(power, 0) + coeff
        top = max(powers)
        return cls(tuple(powers.get(i, 0) for i in range(top + 1)))
