"""Rational obstructions to immersing or embedding a manifold in ``R^n``.

In odd codimension an immersion forces the Pontryagin classes to vanish in a
window of degrees, and a closed embedding forces them to vanish in a wider one
because its normal Euler class is zero.  Both tests only look at classes in the
free part of cohomology.  A manifold that passes still has finite-order
obstructions, which are not computed; every passing report says so.

In even codimension ``c`` the lift problem reduces to finding an Euler class
``e in H^c`` with ``e^2 = p_{c/2}``, a system of quadratic equations in the
coordinates of ``e``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from ..diophantine import QuadSystem, validate
from ..diophantine.system import Equation
from ..env.messages import DEBUG, WARN
from ..util.error import MissingClassData, NotApplicable, OddCodimension
from .classes import ManifoldClassData


class Verdict(str, Enum):
    """The outcome of a rational obstruction test."""

    RATIONALLY_UNOBSTRUCTED = "RationallyUnobstructed"
    OBSTRUCTED = "Obstructed"


@dataclass(frozen=True)
class ObstructionReport:
    """The result of a Pontryagin-class test.

    `witness_degree` is the least ``i`` with ``p_i != 0`` in the window.
    `residual` is set exactly when the verdict is unobstructed: the finite
    obstructions beyond the rational ones were not examined.
    """

    verdict: Verdict
    witness_degree: int | None = None
    window: tuple[int, ...] = ()
    vacuous: tuple[int, ...] = ()
    torsion_ignored: tuple[int, ...] = ()
    notes: tuple[str, ...] = field(default=())

    def __post_init__(self) -> None:
        if (self.verdict is Verdict.OBSTRUCTED) != (self.witness_degree is not None):
            raise ValueError(
                "an obstructed report needs a witness degree, and only then"
            )

    @property
    def residual(self) -> bool:
        """Whether finite-order obstructions remain unexamined."""
        return self.verdict is Verdict.RATIONALLY_UNOBSTRUCTED

    def to_json(self) -> dict[str, Any]:
        """The ``obstruction-report`` payload."""
        return {
            "verdict": self.verdict.value,
            "witness_degree": self.witness_degree,
            "residual": "FiniteObstructionsNotComputed" if self.residual else None,
            "window": list(self.window),
            "vacuous": list(self.vacuous),
            "torsion_ignored": list(self.torsion_ignored),
            "notes": list(self.notes),
        }


#######################
####    PRIVATE    ####
#######################


def _scan(
    data: ManifoldClassData, window: range, vacuous: tuple[int, ...]
) -> ObstructionReport:
    """Report the least ``i`` in `window` with ``p_i != 0``."""
    torsion = tuple(i for i in window if data.torsion_in(4 * i))
    notes = []
    if torsion:
        notes.append("torsion in H^4i ignored for i in " + str(list(torsion)))
    if vacuous:
        notes.append(f"p_i vanishes for 4i > m = {data.m}: i in {list(vacuous)}")
    for i in window:
        coords = data.pontryagin_class(i)
        if coords is None:
            raise MissingClassData(f"p_{i} is required but was not supplied")
        if any(coords):
            DEBUG(f"p_{i} = {coords} is nonzero")
            return ObstructionReport(
                Verdict.OBSTRUCTED,
                witness_degree=i,
                window=tuple(window),
                vacuous=vacuous,
                torsion_ignored=torsion,
                notes=tuple(notes),
            )
    if not window:
        notes.append("empty window")
    return ObstructionReport(
        Verdict.RATIONALLY_UNOBSTRUCTED,
        window=tuple(window),
        vacuous=vacuous,
        torsion_ignored=torsion,
        notes=tuple(notes),
    )


######################
####    PUBLIC    ####
######################


def pontryagin_obstruction(data: ManifoldClassData, n: int) -> ObstructionReport:
    """Test ``p_i = 0`` for ``2(n - m) < 4i <= m``.

    Parameters
    ----------
    data : ManifoldClassData
        The manifold.
    n : int
        The target dimension, greater than ``m``.

    Returns
    -------
    ObstructionReport
        Obstructed at the least nonzero class in the window, otherwise
        rationally unobstructed.

    Raises
    ------
    ValueError
        If ``n <= m``.
    MissingClassData
        If a class in the window is unknown.

    Examples
    --------
    For ``HP^2`` with ``p = 1 + 2u + 7u^2`` and ``n = 11`` the window is
    ``6 < 4i <= 8``, so ``i = 2`` and ``p_2 = 7u^2`` obstructs.
    """
    if n <= data.m:
        raise ValueError(f"target dimension {n} must exceed m = {data.m}")
    window = range((2 * (n - data.m)) // 4 + 1, data.m // 4 + 1)
    return _scan(data, window, ())


def closed_embedding_obstruction(data: ManifoldClassData, n: int) -> ObstructionReport:
    """Test ``p_i = 0`` for ``2(n - m) <= 4i <= 2m`` on a closed oriented manifold.

    Degrees with ``4i > m`` are in the window but pass automatically; they are
    listed as vacuous.

    Parameters
    ----------
    data : ManifoldClassData
        The manifold.  Must be orientable and closed.
    n : int
        The target dimension, greater than ``m``.

    Returns
    -------
    ObstructionReport
        As for :func:`pontryagin_obstruction`.

    Raises
    ------
    ValueError
        If ``n <= m``.
    NotApplicable
        If the manifold is non-orientable or has boundary.
    MissingClassData
        If a class in the effective window is unknown.
    """
    if not data.orientable:
        raise NotApplicable("the closed-embedding test needs an orientable manifold")
    if not data.closed:
        raise NotApplicable("the closed-embedding test needs a closed manifold")
    if n <= data.m:
        raise ValueError(f"target dimension {n} must exceed m = {data.m}")
    low = -(-2 * (n - data.m) // 4)
    high = (2 * data.m) // 4
    effective = range(low, min(high, data.m // 4) + 1)
    vacuous = tuple(i for i in range(low, high + 1) if 4 * i > data.m)
    return _scan(data, effective, vacuous)


def euler_square_problem(data: ManifoldClassData, n: int) -> QuadSystem:
    """The equations ``e^2 = p_{c/2}`` for an Euler class ``e in H^c``, ``c = n - m``.

    Equation ``k`` reads ``sum over i <= j of Q^(k)_ij x_i x_j = (p_{c/2})_k``
    where ``Q^(k)`` is the ``k``-th middle form and ``x`` are the coordinates
    of ``e`` in the free part of ``H^c``.

    Parameters
    ----------
    data : ManifoldClassData
        The manifold, with middle forms declared for ``c``.
    n : int
        The target dimension.

    Returns
    -------
    QuadSystem
        A validated system with ``include_squares`` set.  A missing
        ``p_{c/2}`` is taken as zero.

    Raises
    ------
    OddCodimension
        If ``n - m`` is odd.
    ValueError
        If ``n <= m``.
    MissingClassData
        If no middle forms are declared for ``c``, or the rank of ``H^c``
        cannot be determined.
    """
    c = n - data.m
    if c % 2:
        raise OddCodimension(f"codimension {c} is odd; the Euler class squares to 0")
    if c <= 0:
        raise ValueError(f"target dimension {n} must exceed m = {data.m}")
    middle = data.middle
    if middle is None or middle.c != c:
        declared = "none" if middle is None else f"c = {middle.c}"
        raise MissingClassData(
            f"middle forms for c = {c} are required ({declared} given)"
        )

    r = middle.rank if middle.rank is not None else data.free_rank(c)
    if r is None:
        raise MissingClassData(f"the rank of H^{c} is unknown")
    if data.torsion_in(c):
        WARN(f"torsion in H^{c} ignored; Euler classes range over the free part")

    targets = data.pontryagin_class(c // 2)
    if not targets:
        targets = (0,) * len(middle.forms)
    if len(targets) != len(middle.forms):
        raise MissingClassData(
            f"p_{c // 2} has {len(targets)} coordinates for {len(middle.forms)} forms"
        )

    equations = []
    for form, b in zip(middle.forms, targets):
        terms = tuple(
            (i + 1, j + 1, form[i, j])
            for i in range(r)
            for j in range(i, r)
            if form[i, j]
        )
        equations.append(Equation(terms, b))
    return validate(QuadSystem(r, tuple(equations), include_squares=True))
