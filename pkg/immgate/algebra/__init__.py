"""Exact arithmetic: Bernoulli numbers, integer matrices, abelian groups, forms.

Rationals are :class:`fractions.Fraction`, which keeps every value reduced with a
positive denominator.
"""
from fractions import Fraction as BigRational

from .bernoulli import bernoulli
from .forms import QuadraticRefinement, arf_invariant, signature
from .groups import (
    FGAbelianGroup, Homomorphism, coprime, group_from_presentation, subgroup_generated
)
from .matrix import IntMatrix, left_kernel, lattice_contains, smith_normal_form
