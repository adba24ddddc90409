"""Exact arithmetic on finite abelian groups, lattices, forms and roots of unity."""

from hopfext.algebra.cyclotomic import CyclotomicField
from hopfext.algebra.groups import AbelianGroup, Endomorphism, parse_group
from hopfext.algebra.lattice import KernelLattice, kernel_mod

__all__ = [
    "AbelianGroup",
    "Endomorphism",
    "parse_group",
    "KernelLattice",
    "kernel_mod",
    "CyclotomicField",
]
