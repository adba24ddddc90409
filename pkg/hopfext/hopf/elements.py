"""Sparse sums of basis tensors with root-of-unity coefficients.

A SparseSum is Σ ζ_m^{e_k}·b_{key_k}, where keys encode basis elements or
tuples of them. Equal keys are combined in Q(ζ_m); when every key occurs
once the sum is compared term by term on exponents.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from hopfext.algebra.cyclotomic import CyclotomicField


@dataclass(frozen=True, eq=False)
class SparseSum:
    modulus: int
    keys: np.ndarray
    exps: np.ndarray

    @classmethod
    def empty(cls, modulus: int) -> SparseSum:
        return cls(modulus, np.zeros(0, dtype=np.int64), np.zeros(0, dtype=np.int64))

    @classmethod
    def of(cls, modulus: int, keys, exps) -> SparseSum:
        return cls(
            modulus,
            np.asarray(keys, dtype=np.int64).reshape(-1),
            np.asarray(exps, dtype=np.int64).reshape(-1) % modulus,
        )

    def __len__(self) -> int:
        return int(self.keys.size)

    def has_unique_keys(self) -> bool:
        return np.unique(self.keys).size == self.keys.size

    def combined(self, field: CyclotomicField) -> dict[int, np.ndarray]:
        """key -> coefficient in Q(ζ_m), zero coefficients dropped."""
        totals: dict[int, np.ndarray] = {}
        for key, e in zip(self.keys.tolist(), self.exps.tolist(), strict=True):
            root = field.root(e)
            totals[key] = totals[key] + root if key in totals else root
        return {k: v for k, v in totals.items() if not field.is_zero(v)}


def first_difference(left: SparseSum, right: SparseSum, field: CyclotomicField | None = None) -> int | None:
    """Least key where the two sums differ, or None when they are equal."""
    if left.has_unique_keys() and right.has_unique_keys():
        lo, ro = np.argsort(left.keys, kind="stable"), np.argsort(right.keys, kind="stable")
        lk, le = left.keys[lo], left.exps[lo]
        rk, re_ = right.keys[ro], right.exps[ro]
        if lk.size == rk.size and np.array_equal(lk, rk) and np.array_equal(le, re_):
            return None
        diff = np.setxor1d(lk, rk)
        if diff.size:
            return int(diff.min())
        return int(lk[np.nonzero(le != re_)[0][0]])

    field = field or CyclotomicField(left.modulus)
    a, b = left.combined(field), right.combined(field)
    keys = sorted(set(a) | set(b))
    for key in keys:
        if key not in a or key not in b or not np.array_equal(a[key], b[key]):
            return key
    return None


@dataclass
class Element:
    """An element of H as basis index -> coefficient in Q(ζ_m)."""

    field: CyclotomicField
    coefficients: dict[int, np.ndarray]

    @classmethod
    def zero(cls, field: CyclotomicField) -> Element:
        return cls(field, {})

    @classmethod
    def from_terms(cls, field: CyclotomicField, basis, exponents) -> Element:
        element = cls.zero(field)
        for b, e in zip(np.asarray(basis).tolist(), np.asarray(exponents).tolist(), strict=True):
            element.add_term(b, field.root(e))
        return element

    def add_term(self, basis: int, value: np.ndarray) -> None:
        total = self.coefficients.get(basis)
        total = value.copy() if total is None else total + value
        if self.field.is_zero(total):
            self.coefficients.pop(basis, None)
        else:
            self.coefficients[basis] = total

    def __add__(self, other: Element) -> Element:
        result = Element(self.field, {k: v.copy() for k, v in self.coefficients.items()})
        for basis, value in other.coefficients.items():
            result.add_term(basis, value)
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        if set(self.coefficients) != set(other.coefficients):
            return False
        return all(np.array_equal(v, other.coefficients[k]) for k, v in self.coefficients.items())

    def is_zero(self) -> bool:
        return not self.coefficients

    def support(self) -> list[int]:
        return sorted(self.coefficients)


__all__ = ["SparseSum", "Element", "first_difference"]
