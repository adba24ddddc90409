"""Exact scalars: roots of unity as exponents, sums in Q(ζ_m).

Every structure constant of the algebras built here is 0 or a root of
unity, so CyclotomicScalar (an exponent mod m) covers the tables. Sums of
roots of unity, which appear when general elements are multiplied, live in
CyclotomicField: integer coordinate vectors in the power basis of Q(ζ_m),
reduced modulo the m-th cyclotomic polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np
import sympy


@dataclass(frozen=True)
class CyclotomicScalar:
    """0 (exponent None) or ζ_m^exponent."""

    modulus: int
    exponent: int | None

    def __post_init__(self) -> None:
        if self.exponent is not None:
            object.__setattr__(self, "exponent", self.exponent % self.modulus)

    @classmethod
    def zero(cls, modulus: int) -> CyclotomicScalar:
        return cls(modulus, None)

    @classmethod
    def one(cls, modulus: int) -> CyclotomicScalar:
        return cls(modulus, 0)

    @property
    def is_zero(self) -> bool:
        return self.exponent is None

    def __mul__(self, other: CyclotomicScalar) -> CyclotomicScalar:
        if self.modulus != other.modulus:
            raise ValueError("Scalars use different moduli")
        if self.is_zero or other.is_zero:
            return CyclotomicScalar.zero(self.modulus)
        return CyclotomicScalar(self.modulus, self.exponent + other.exponent)

    def inverse(self) -> CyclotomicScalar:
        if self.is_zero:
            raise ZeroDivisionError("0 has no inverse")
        return CyclotomicScalar(self.modulus, -self.exponent)

    def __pow__(self, n: int) -> CyclotomicScalar:
        if self.is_zero:
            return self
        return CyclotomicScalar(self.modulus, self.exponent * n)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        return "1" if self.exponent == 0 else f"ζ_{self.modulus}^{self.exponent}"


class CyclotomicField:
    """Q(ζ_m) with exact integer arithmetic in the power basis."""

    def __init__(self, modulus: int):
        if modulus < 1:
            raise ValueError(f"Modulus must be positive, got {modulus}")
        self.modulus = modulus
        x = sympy.Symbol("x")
        poly = sympy.Poly(sympy.cyclotomic_poly(modulus, x), x)
        # low degree first; monic
        self._reducer = np.array([int(c) for c in reversed(poly.all_coeffs())], dtype=np.int64)
        self.degree = len(self._reducer) - 1

    def reduce(self, coeffs) -> np.ndarray:
        """Remainder of a polynomial (low degree first) modulo Φ_m."""
        work = np.array(coeffs, dtype=np.int64)
        for k in range(work.size - 1, self.degree - 1, -1):
            lead = work[k]
            if lead:
                work[k - self.degree : k + 1] -= lead * self._reducer
        out = np.zeros(self.degree, dtype=np.int64)
        size = min(self.degree, work.size)
        out[:size] = work[:size]
        return out

    @cached_property
    def _root_table(self) -> np.ndarray:
        table = np.zeros((self.modulus, self.degree), dtype=np.int64)
        for e in range(self.modulus):
            monomial = np.zeros(e + 1, dtype=np.int64)
            monomial[e] = 1
            table[e] = self.reduce(monomial)
        return table

    @cached_property
    def _root_lookup(self) -> dict[bytes, int]:
        return {row.tobytes(): e for e, row in enumerate(self._root_table)}

    def zero(self) -> np.ndarray:
        return np.zeros(self.degree, dtype=np.int64)

    def root(self, exponent: int) -> np.ndarray:
        return self._root_table[exponent % self.modulus].copy()

    def from_exponents(self, exponents) -> np.ndarray:
        """Σ ζ^e over the given exponents."""
        exps = np.asarray(list(exponents), dtype=np.int64) % self.modulus
        if exps.size == 0:
            return self.zero()
        return self._root_table[exps].sum(axis=0)

    def from_scalar(self, scalar: CyclotomicScalar) -> np.ndarray:
        return self.zero() if scalar.is_zero else self.root(scalar.exponent)

    def mul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return self.reduce(np.convolve(a, b))

    def inverse_root(self, value: np.ndarray) -> np.ndarray:
        """Inverse of a value that is a root of unity."""
        exponent = self.as_root(value)
        if exponent is None:
            raise ValueError("Only roots of unity are inverted")
        return self.root(-exponent)

    @staticmethod
    def is_zero(value: np.ndarray) -> bool:
        return not np.any(value)

    def as_root(self, value: np.ndarray) -> int | None:
        """Exponent e with value = ζ^e, or None."""
        return self._root_lookup.get(np.asarray(value, dtype=np.int64).tobytes())

    def to_sympy(self, value: np.ndarray) -> sympy.Expr:
        """Symbolic form, for presentations."""
        zeta = sympy.Symbol(f"zeta{self.modulus}")
        return sympy.Add(*[int(c) * zeta**k for k, c in enumerate(value) if c])


__all__ = ["CyclotomicScalar", "CyclotomicField"]
