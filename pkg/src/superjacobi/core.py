"""Coefficient field and Z2 parity helpers.

Coefficients are :class:`fractions.Fraction`; it already keeps values in
lowest terms with a positive denominator and represents zero as ``0/1``.
Parities are the plain integers 0 and 1.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

Coeff = Fraction
Parity = int

CoeffLike = Union[int, str, Fraction]


def parity(p: int) -> Parity:
    if p not in (0, 1):
        raise ValueError(f"parity must be 0 or 1, got {p!r}")
    return p


def parity_sum(parities: Iterable[int]) -> Parity:
    return sum(parities) % 2


def koszul_sign(p: int, q: int) -> Coeff:
    """(-1)**(p*q) as an exact coefficient."""
    return Fraction(-1) if (p & q & 1) else Fraction(1)


def sign(exponent: int) -> int:
    """(-1)**exponent as an int (cheap form used inside hot loops)."""
    return -1 if exponent & 1 else 1


def parse_coeff(value: CoeffLike) -> Coeff:
    """Read a rational literal: an int or a string ``"p/q"`` / ``"p"``."""
    if isinstance(value, bool):
        raise ValueError("booleans are not coefficients")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text:
            raise ValueError("empty coefficient literal")
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad rational literal {value!r}") from exc
    raise ValueError(f"unsupported coefficient literal {value!r}")


def format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def coeff_to_json(c: Fraction) -> Union[int, str]:
    """Integers stay integers in JSON; everything else becomes ``"p/q"``."""
    return c.numerator if c.denominator == 1 else format_coeff(c)
