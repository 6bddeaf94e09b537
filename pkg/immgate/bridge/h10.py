"""Translate between quadratic systems and lifting problems over a wedge of spheres.

A system in ``r`` variables and ``s`` equations becomes the complex ``X``
obtained from a wedge of ``r`` copies of ``S^c`` by attaching one ``2c``-cell per
equation along ``sum a_ij [i_i, i_j]``, together with the map ``X -> BSO``
sending the ``k``-th ``2c``-cell to ``b_k`` times the generator.  A lift to
``BSO_c`` is an Euler class ``e = sum x_i e_i`` with ``e^2 = p_{c/2}``, which is
the original system again.  The ``(4c+1)``-dimensional thickening of ``X`` has a
closed ``4c``-dimensional boundary that immerses in ``R^{5c}`` exactly when the
lift exists.

Instances are symbolic: no cell structure is realized.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Mapping

from ..algebra import FGAbelianGroup, IntMatrix
from ..diophantine import QuadSystem, SolveOutcome, solve_within_bound, validate
from ..diophantine.system import Equation, Term
from ..obstruction import ManifoldClassData, MiddleForms
from ..util.error import (
    DiagonalTermsPresent, MalformedIndices, OddHalfDegree, SchemaError
)


@dataclass(frozen=True)
class Cell:
    """One ``2c``-cell: its attaching coefficients and its degree into BSO.

    `diagonal` holds ``(i, a)`` pairs for a nonzero cup square ``e_i^2``.
    Compiled instances never have any.
    """

    coeffs: tuple[Term, ...]
    bso_degree: int
    diagonal: tuple[tuple[int, int], ...] = ()


@dataclass(frozen=True)
class LiftingInstance:
    """A wedge of `r` spheres ``S^c`` with ``2c``-cells attached.

    Raises
    ------
    OddHalfDegree
        If `c` is odd.
    ValueError
        If ``c < 2`` or ``r < 1``.
    MalformedIndices
        If an attaching pair is not ``1 <= i < j <= r``.
    """

    c: int
    r: int
    cells: tuple[Cell, ...] = ()

    def __post_init__(self) -> None:
        if self.c % 2:
            raise OddHalfDegree(f"half-degree must be even, not {self.c}")
        if self.c < 2:
            raise ValueError(f"half-degree must be at least 2, not {self.c}")
        if self.r < 1:
            raise ValueError(
                f"a lifting instance needs at least one sphere, not {self.r}"
            )
        for k, cell in enumerate(self.cells, start=1):
            for i, j, _ in cell.coeffs:
                if not 1 <= i < j <= self.r:
                    raise MalformedIndices(
                        f"cell {k}: attaching pair ({i}, {j}) invalid"
                    )
            for i, _ in cell.diagonal:
                if not 1 <= i <= self.r:
                    raise MalformedIndices(f"cell {k}: diagonal index {i} invalid")

    @property
    def s(self) -> int:
        """The number of ``2c``-cells."""
        return len(self.cells)

    def to_json(self) -> dict[str, Any]:
        """The ``lifting-instance`` document (without a schema tag)."""
        cells = []
        for cell in self.cells:
            doc: dict[str, Any] = {
                "coeffs": [list(t) for t in cell.coeffs],
                "bso_degree": cell.bso_degree,
            }
            if cell.diagonal:
                doc["diagonal"] = [list(d) for d in cell.diagonal]
            cells.append(doc)
        return {"c": self.c, "r": self.r, "cells": cells}

    @classmethod
    def from_json(cls, doc: Mapping[str, Any]) -> LiftingInstance:
        """Decode a ``lifting-instance`` document.

        Raises
        ------
        SchemaError
            If a field is missing or mistyped.
        """
        try:
            cells = tuple(
                Cell(
                    tuple((int(i), int(j), int(a)) for i, j, a in raw["coeffs"]),
                    int(raw["bso_degree"]),
                    tuple((int(i), int(a)) for i, a in raw.get("diagonal", [])),
                )
                for raw in doc["cells"]
            )
            return cls(int(doc["c"]), int(doc["r"]), cells)
        except (KeyError, TypeError) as err:
            raise SchemaError(f"malformed lifting instance: {err}") from err


@dataclass(frozen=True)
class ThickeningMetadata:
    """Dimensions attached to the thickening of a lifting instance."""

    c: int
    thickening_dim: int
    boundary_dim: int
    target_dim: int

    def __post_init__(self) -> None:
        if (
            self.thickening_dim != self.boundary_dim + 1
            or self.target_dim != 5 * self.c
        ):
            raise ValueError(f"inconsistent thickening dimensions: {self}")

    def to_json(self) -> dict[str, Any]:
        """JSON form."""
        return {
            "c": self.c,
            "thickening_dim": self.thickening_dim,
            "boundary_dim": self.boundary_dim,
            "target_dim": self.target_dim,
        }


######################
####    PUBLIC    ####
######################


def compile_to_lifting(system: QuadSystem, c: int) -> LiftingInstance:
    """Build the lifting instance of a system without diagonal terms.

    Parameters
    ----------
    system : QuadSystem
        A system with at least one variable.  It is validated first.
    c : int
        The sphere dimension, even and at least 2.

    Returns
    -------
    LiftingInstance
        ``system.r`` spheres and one cell per equation.

    Raises
    ------
    MalformedIndices
        If the system does not validate.
    OddHalfDegree
        If `c` is odd.
    DiagonalTermsPresent
        If the system has ``include_squares`` set.
    ValueError
        If ``c < 2`` or the system has no variables.
    """
    system = validate(system)
    if c % 2:
        raise OddHalfDegree(
            f"c = {c} is odd; the Euler class squares to the top Pontryagin class "
            "only in even codimension"
        )
    if system.include_squares:
        raise DiagonalTermsPresent("the reduction has no x_i^2 terms")
    cells = tuple(Cell(eq.coeffs, eq.target) for eq in system.equations)
    return LiftingInstance(c, system.r, cells)


def extract_quadratic(instance: LiftingInstance) -> QuadSystem:
    """The system ``e^2 = p_{c/2}`` in the sphere coordinates of ``e``.

    Mixed terms come from the attaching coefficients.  Cup squares ``e_i^2``
    vanish unless a cell declares a diagonal entry.
    """
    squares = any(a for cell in instance.cells for _, a in cell.diagonal)
    equations = []
    for cell in instance.cells:
        terms = cell.coeffs
        if squares:
            terms += tuple((i, i, a) for i, a in cell.diagonal)
        equations.append(Equation(terms, cell.bso_degree))
    return validate(QuadSystem(instance.r, tuple(equations), include_squares=squares))


def thickening_metadata(instance: LiftingInstance) -> ThickeningMetadata:
    """``(c, 4c + 1, 4c, 5c)``: depends on the half-degree alone."""
    c = instance.c
    return ThickeningMetadata(c, 4 * c + 1, 4 * c, 5 * c)


def lifting_solvable(
    instance: LiftingInstance,
    bound: int,
    budget: int | None = None,
    workers: int | None = None,
) -> SolveOutcome:
    """Search for a lift with Euler class coordinates bounded by `bound`.

    A solution certifies the lift and with it an immersion of the boundary of
    the thickening.  Exhausting the box certifies nothing.

    Raises
    ------
    BudgetExceeded
        As for :func:`immgate.diophantine.solve_within_bound`.
    """
    return solve_within_bound(extract_quadratic(instance), bound, budget, workers)


def class_data_from_lifting(instance: LiftingInstance) -> ManifoldClassData:
    """Class data of the thickening boundary seen by the Euler-square test.

    The boundary has dimension ``m = 4c``, codimension ``c`` in ``R^{5c}``,
    ``H^c = Z^r``, ``H^{2c} = Z^s``, ``p_{c/2} = b`` and one middle form per
    cell with the attaching coefficients off the diagonal.
    """
    c, r = instance.c, instance.r
    forms = []
    for cell in instance.cells:
        rows = [[0] * r for _ in range(r)]
        for i, j, a in cell.coeffs:
            rows[i - 1][j - 1] += a
            rows[j - 1][i - 1] += a
        for i, a in cell.diagonal:
            rows[i - 1][i - 1] += a
        forms.append(IntMatrix.from_rows(rows, cols=r))
    return ManifoldClassData(
        m=4 * c,
        orientable=True,
        cohomology={c: FGAbelianGroup(r), 2 * c: FGAbelianGroup(instance.s)},
        pontryagin={c // 2: tuple(cell.bso_degree for cell in instance.cells)},
        middle=MiddleForms(c, tuple(forms)),
    )
