"""Finitely generated abelian groups in invariant-factor form.

A group is stored as ``Z^rank ⊕ Z/d1 ⊕ ... ⊕ Z/dk`` with ``1 < d1 | d2 | ... | dk``.
Groups are built from presentations (generators and integer relations) by the
Smith normal form, which also gives kernels, cokernels and subgroups of maps
between presented groups.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd, prod
from typing import Any, Sequence

from sympy import factorint

from ..util.error import shorten_list
from .matrix import IntMatrix, left_kernel, lattice_contains, smith_normal_form


_TERM = re.compile(r"^Z(?:/(\d+))?(?:\^(\d+))?$")


@dataclass(frozen=True, order=True)
class FGAbelianGroup:
    """``Z^free_rank ⊕ Z/torsion[0] ⊕ ... ⊕ Z/torsion[-1]``.

    Equal groups compare equal, so ``==`` is isomorphism.
    """

    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.free_rank < 0:
            raise ValueError(f"free rank must be non-negative, not {self.free_rank}")
        for d in self.torsion:
            if d <= 1:
                raise ValueError(f"invariant factors must exceed 1: {self.torsion}")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError(
                    f"invariant factors must form a divisibility chain: {self.torsion}"
                )

    @classmethod
    def trivial(cls) -> FGAbelianGroup:
        """The zero group."""
        return cls()

    @classmethod
    def integers(cls) -> FGAbelianGroup:
        """The infinite cyclic group Z."""
        return cls(1)

    @classmethod
    def cyclic(cls, order: int) -> FGAbelianGroup:
        """``Z/order``, with 0 meaning Z and 1 the trivial group."""
        return cls.from_orders(order)

    @classmethod
    def from_orders(cls, *orders: int) -> FGAbelianGroup:
        """The direct sum of cyclic groups of the given orders.

        Parameters
        ----------
        *orders : int
            Non-negative orders.  0 stands for Z and 1 is ignored.

        Returns
        -------
        FGAbelianGroup
            The sum in invariant-factor form.

        Raises
        ------
        ValueError
            If any order is negative.
        """
        if any(d < 0 for d in orders):
            raise ValueError(f"cyclic orders must be non-negative: {orders}")
        n = len(orders)
        relations = IntMatrix.from_rows(
            [[d if i == j else 0 for j in range(n)] for i, d in enumerate(orders)],
            cols=n,
        )
        return group_from_presentation(n, relations)

    @classmethod
    def parse(cls, text: str) -> FGAbelianGroup:
        """Parse the format produced by :meth:`__str__`, e.g. ``"Z^2 + Z/2 + Z/12"``.

        Parameters
        ----------
        text : str
            Summands separated by ``+``.  ``0`` is the trivial group.

        Returns
        -------
        FGAbelianGroup
            The parsed group.

        Raises
        ------
        ValueError
            If a summand is not of the form ``Z``, ``Z^k``, ``Z/d`` or ``Z/d^k``.
        """
        orders: list[int] = []
        for term in text.replace(" ", "").replace("⊕", "+").split("+"):
            if term in ("", "0"):
                continue
            match = _TERM.match(term)
            if match is None:
                raise ValueError(f"cannot parse group summand {repr(term)}")
            order = int(match.group(1)) if match.group(1) else 0
            orders.extend([order] * int(match.group(2) or 1))
        return cls.from_orders(*orders)

    ##########################
    ####    PROPERTIES    ####
    ##########################

    @property
    def is_trivial(self) -> bool:
        """Whether this is the zero group."""
        return self.free_rank == 0 and not self.torsion

    @property
    def is_finite(self) -> bool:
        """Whether the free rank is zero."""
        return self.free_rank == 0

    @property
    def is_free(self) -> bool:
        """Whether the torsion subgroup is trivial."""
        return not self.torsion

    @property
    def order(self) -> int | None:
        """The number of elements, or None if the group is infinite."""
        return prod(self.torsion) if self.is_finite else None

    @property
    def generator_count(self) -> int:
        """The number of generators in the canonical presentation."""
        return self.free_rank + len(self.torsion)

    def relations(self) -> IntMatrix:
        """Relations of the canonical presentation: free generators first.

        Returns
        -------
        IntMatrix
            One row per torsion generator, ``d`` in that generator's column.
        """
        g = self.generator_count
        return IntMatrix.from_rows(
            [
                [d if j == self.free_rank + i else 0 for j in range(g)]
                for i, d in enumerate(self.torsion)
            ],
            cols=g,
        )

    def elementary_divisors(self) -> tuple[int, ...]:
        """The prime-power orders of the primary decomposition, sorted.

        Returns
        -------
        tuple[int, ...]
            e.g. ``(2, 4, 3)`` becomes ``(2, 3, 4)`` for ``Z/2 ⊕ Z/12``.
        """
        divisors = []
        for d in self.torsion:
            for p, e in factorint(d).items():
                divisors.append(int(p) ** e)
        return tuple(sorted(divisors))

    def direct_sum(self, *others: FGAbelianGroup) -> FGAbelianGroup:
        """The direct sum of this group with others."""
        orders: list[int] = []
        for group in (self, *others):
            orders.extend([0] * group.free_rank)
            orders.extend(group.torsion)
        return FGAbelianGroup.from_orders(*orders)

    def to_json(self) -> dict[str, Any]:
        """A JSON object with ``rank``, ``torsion`` and a readable ``name``."""
        return {
            "rank": self.free_rank,
            "torsion": list(self.torsion),
            "name": str(self),
        }

    @classmethod
    def from_json(cls, doc: dict[str, Any]) -> FGAbelianGroup:
        """Inverse of :meth:`to_json`; ``torsion`` may be in any order."""
        free = [0] * int(doc.get("rank", 0))
        return cls.from_orders(*free, *doc.get("torsion", []))

    def __str__(self) -> str:
        if self.is_trivial:
            return "0"
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts)


######################
####    PUBLIC    ####
######################


def group_from_presentation(generators: int, relations: IntMatrix) -> FGAbelianGroup:
    """The abelian group ``Z^generators / rowspan(relations)``.

    Parameters
    ----------
    generators : int
        The number of generators.
    relations : IntMatrix
        One relation per row, with ``generators`` columns.

    Returns
    -------
    FGAbelianGroup
        The presented group in invariant-factor form.

    Raises
    ------
    ValueError
        If the relation matrix has the wrong number of columns.
    """
    if relations.cols != generators:
        raise ValueError(
            f"relations have {relations.cols} columns but there are "
            f"{generators} generators"
        )
    _, d, _ = smith_normal_form(relations)
    diag = [x for x in d.diagonal() if x]
    return FGAbelianGroup(
        free_rank=generators - len(diag),
        torsion=tuple(x for x in diag if x > 1),
    )


def subgroup_generated(elements: IntMatrix, relations: IntMatrix) -> FGAbelianGroup:
    """The subgroup of ``Z^n / rowspan(relations)`` generated by some elements.

    Parameters
    ----------
    elements : IntMatrix
        One element per row, in the generator coordinates of the ambient group.
    relations : IntMatrix
        Relations of the ambient group.

    Returns
    -------
    FGAbelianGroup
        The isomorphism type of the subgroup.
    """
    t = elements.rows
    # c is a relation among the elements iff c @ elements lies in rowspan(relations)
    syzygies = left_kernel(elements.stack(relations)).columns(t)
    return group_from_presentation(t, syzygies)


@dataclass(frozen=True)
class Homomorphism:
    """A map ``source -> target`` given by the images of source generators.

    Row ``i`` of `matrix` holds the image of the i-th canonical generator of
    `source` in the canonical generators of `target` (free generators first).
    """

    source: FGAbelianGroup
    target: FGAbelianGroup
    matrix: IntMatrix

    def __post_init__(self) -> None:
        m = self.matrix
        rows, cols = self.source.generator_count, self.target.generator_count
        if m.rows != rows or m.cols != cols:
            raise ValueError(
                f"a map {self.source} -> {self.target} needs a "
                f"{self.source.generator_count}x{self.target.generator_count} matrix, "
                f"not {m.rows}x{m.cols}"
            )
        relations = self.target.relations()
        for i, d in enumerate(self.source.torsion):
            row = m.entries[self.source.free_rank + i]
            if not lattice_contains(relations, [d * x for x in row]):
                raise ValueError(
                    f"generator of order {d} maps to {shorten_list(row)}, whose "
                    f"order does not divide {d} in {self.target}"
                )

    @classmethod
    def zero(cls, source: FGAbelianGroup, target: FGAbelianGroup) -> Homomorphism:
        """The zero map."""
        return cls(
            source,
            target,
            IntMatrix.zeros(source.generator_count, target.generator_count),
        )

    @property
    def is_zero(self) -> bool:
        """Whether every generator maps into the relation lattice."""
        relations = self.target.relations()
        return all(lattice_contains(relations, row) for row in self.matrix)

    def kernel_basis(self) -> IntMatrix:
        """Source-coordinate vectors spanning the kernel (with source relations)."""
        a = self.source.generator_count
        stacked = self.matrix.stack(self.target.relations())
        return left_kernel(stacked).columns(a)

    def kernel(self) -> FGAbelianGroup:
        """The isomorphism type of the kernel."""
        return subgroup_generated(self.kernel_basis(), self.source.relations())

    def image(self) -> FGAbelianGroup:
        """The isomorphism type of the image."""
        return subgroup_generated(self.matrix, self.target.relations())

    def cokernel(self) -> FGAbelianGroup:
        """The isomorphism type of ``target / image``."""
        return group_from_presentation(
            self.target.generator_count,
            self.matrix.stack(self.target.relations()),
        )

    def apply(self, vector: Sequence[int]) -> tuple[int, ...]:
        """The image of a source element given in generator coordinates."""
        row = IntMatrix.from_rows([list(vector)], cols=self.matrix.rows)
        return (row @ self.matrix).entries[0]


def coprime(a: FGAbelianGroup, b: FGAbelianGroup) -> bool:
    """Whether two finite groups have coprime orders."""
    if a.order is None or b.order is None:
        return False
    return gcd(a.order, b.order) == 1
