"""Exact sequence factorials, falling products and coefficient triangles.

All arithmetic is arbitrary-precision integer or rational; there is no
floating-point mode.  Non-integer coefficients are returned with their
integrality flag cleared rather than raised, so admissibility scans can
observe them.  Every function here is pure and safe for concurrent use.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction

from .fseq import FSequence


@dataclass(frozen=True)
class FNomialValue:
    """A coefficient in lowest terms with a positive denominator."""

    numerator: int
    denominator: int

    def __post_init__(self) -> None:
        if self.denominator <= 0:
            raise ValueError("denominator must be positive")
        if math.gcd(self.numerator, self.denominator) != 1:
            raise ValueError("coefficient must be in lowest terms")

    @classmethod
    def from_fraction(cls, value: Fraction) -> "FNomialValue":
        return cls(value.numerator, value.denominator)

    @property
    def value(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    @property
    def is_integral(self) -> bool:
        return self.denominator == 1

    def __str__(self) -> str:
        if self.denominator == 1:
            return str(self.numerator)
        return f"{self.numerator}/{self.denominator}"


def f_factorial(F: FSequence, n: int) -> int:
    """Product F_1 * F_2 * ... * F_n; the empty product (n = 0) is 1."""
    if n < 0:
        raise ValueError(f"factorial index must be nonnegative, got {n}")
    return math.prod(F.term(j) for j in range(1, n + 1))


def falling_f(F: FSequence, n: int, k: int) -> int:
    """Product F_n * F_(n-1) * ... * F_(n-k+1); the empty product (k = 0) is 1."""
    if not 0 <= k <= n:
        raise ValueError(f"falling product needs 0 <= k <= n, got n={n}, k={k}")
    return math.prod(F.term(j) for j in range(n - k + 1, n + 1))


def f_nomial(F: FSequence, n: int, k: int) -> FNomialValue:
    """The coefficient (n over k)_F as an exact reduced rational.

    Computed as the falling product of length k divided by the k-factorial,
    which keeps intermediate magnitudes down; ``f_nomial_from_factorials``
    is the equivalent three-factorial route and the two must agree.
    """
    if not 0 <= k <= n:
        raise ValueError(f"coefficient needs 0 <= k <= n, got n={n}, k={k}")
    return FNomialValue.from_fraction(Fraction(falling_f(F, n, k), f_factorial(F, k)))


def f_nomial_from_factorials(F: FSequence, n: int, k: int) -> FNomialValue:
    """Same coefficient via F_n! / (F_k! F_(n-k)!), kept as a cross-check route."""
    if not 0 <= k <= n:
        raise ValueError(f"coefficient needs 0 <= k <= n, got n={n}, k={k}")
    return FNomialValue.from_fraction(
        Fraction(f_factorial(F, n), f_factorial(F, k) * f_factorial(F, n - k))
    )


def f_nomial_triangle(F: FSequence, rows: int) -> list[list[FNomialValue]]:
    """All coefficients for 0 <= k <= n < rows, as a ragged table."""
    if rows < 0:
        raise ValueError(f"row count must be nonnegative, got {rows}")
    return [[f_nomial(F, n, k) for k in range(n + 1)] for n in range(rows)]


def triangle_to_csv(triangle: list[list[FNomialValue]]) -> str:
    """Ragged CSV, one row per n, entries as exact decimal (or p/q) strings."""
    return "\n".join(",".join(str(v) for v in row) for row in triangle) + "\n"


def triangle_to_json(triangle: list[list[FNomialValue]]) -> str:
    """JSON array of arrays of strings, preserving arbitrary precision."""
    return json.dumps([[str(v) for v in row] for row in triangle])
