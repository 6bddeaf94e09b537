"""Systems of homogeneous quadratic Diophantine equations.

A :class:`QuadSystem` in variables ``x_1 .. x_r`` has one equation per target
``b_k``::

    sum over i < j of a_ij^(k) x_i x_j = b_k

plus the diagonal terms ``a_ii^(k) x_i^2`` when ``include_squares`` is set.
Indices are 1-based, as in the JSON form::

    {"r": 3, "include_squares": false,
     "equations": [{"coeffs": [[1, 2, 1]], "target": 1}]}
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Any, Sequence

from ..util.error import InternalError, MalformedIndices, SchemaError, shorten_list


Term = tuple[int, int, int]


@dataclass(frozen=True)
class Equation:
    """One equation: terms ``(i, j, a)`` meaning ``a x_i x_j``, and a target."""

    coeffs: tuple[Term, ...]
    target: int

    def value(self, x: Sequence[int]) -> int:
        """The left-hand side at an assignment."""
        return sum(a * x[i - 1] * x[j - 1] for i, j, a in self.coeffs)

    def to_json(self) -> dict[str, Any]:
        """The JSON object for this equation."""
        return {"coeffs": [list(t) for t in self.coeffs], "target": self.target}


@dataclass(frozen=True)
class QuadSystem:
    """A system of quadratic equations.  See :func:`validate` for normal form."""

    r: int
    equations: tuple[Equation, ...] = field(default=())
    include_squares: bool = False

    def __post_init__(self) -> None:
        if self.r < 0:
            raise ValueError(f"variable count must be non-negative, not {self.r}")

    @property
    def s(self) -> int:
        """The number of equations."""
        return len(self.equations)

    @classmethod
    def build(
        cls,
        r: int,
        equations: Sequence[tuple[Sequence[Sequence[int]], int]],
        include_squares: bool = False,
    ) -> QuadSystem:
        """Convenience constructor from ``[(terms, target), ...]``.

        Examples
        --------
        >>> QuadSystem.build(2, [([(1, 2, 1)], 1)])  # x1 x2 = 1
        QuadSystem(r=2, equations=(Equation(coeffs=((1, 2, 1),), target=1),), include_squares=False)
        """
        return cls(
            r,
            tuple(
                Equation(tuple((int(i), int(j), int(a)) for i, j, a in terms), int(b))
                for terms, b in equations
            ),
            include_squares,
        )

    def residuals(self, x: Sequence[int]) -> tuple[int, ...]:
        """``lhs_k(x) - b_k`` for every equation.

        Raises
        ------
        ValueError
            If the assignment has the wrong length.
        """
        if len(x) != self.r:
            raise ValueError(f"expected {self.r} values, got {shorten_list(list(x))}")
        return tuple(eq.value(x) - eq.target for eq in self.equations)

    def satisfied_by(self, x: Sequence[int]) -> bool:
        """Whether every equation holds exactly at `x`."""
        return not any(self.residuals(x))

    ##########################
    ####    JSON CODEC    ####
    ##########################

    def to_json(self) -> dict[str, Any]:
        """The JSON object for this system (without a schema tag)."""
        return {
            "r": self.r,
            "include_squares": self.include_squares,
            "equations": [eq.to_json() for eq in self.equations],
        }

    @classmethod
    def from_json(cls, doc: dict[str, Any]) -> QuadSystem:
        """Decode a system.  The result is not yet normalized.

        Raises
        ------
        SchemaError
            If a required field is missing or has the wrong type.
        """
        try:
            r = doc["r"]
            include_squares = doc.get("include_squares", False)
            raw = doc["equations"]
            if not isinstance(r, int) or not isinstance(include_squares, bool):
                raise TypeError("'r' must be an int and 'include_squares' a bool")
            equations = []
            for eq in raw:
                terms = []
                for term in eq["coeffs"]:
                    if len(term) != 3 or not all(isinstance(t, int) for t in term):
                        raise TypeError(
                            f"coefficient entries are [i, j, a], not {term}"
                        )
                    terms.append((term[0], term[1], term[2]))
                target = eq["target"]
                if not isinstance(target, int):
                    raise TypeError(f"target must be an int, not {repr(target)}")
                equations.append(Equation(tuple(terms), target))
        except (KeyError, TypeError) as err:
            raise SchemaError(f"malformed quadratic system: {err}") from err
        return cls(r, tuple(equations), include_squares)


######################
####    PUBLIC    ####
######################


def validate(system: QuadSystem) -> QuadSystem:
    """Check indices and bring a system into normal form.

    Repeated ``(i, j)`` entries within one equation are summed, zero
    coefficients are dropped and terms are sorted by index.  Equation order is
    preserved.

    Parameters
    ----------
    system : QuadSystem
        Any system.

    Returns
    -------
    QuadSystem
        The normalized system.

    Raises
    ------
    MalformedIndices
        If an index is outside ``1..r``, ``i > j``, or ``i == j`` without
        ``include_squares``.
    """
    equations = []
    for k, eq in enumerate(system.equations, start=1):
        merged: dict[tuple[int, int], int] = defaultdict(int)
        for i, j, a in eq.coeffs:
            if not (1 <= i <= system.r and 1 <= j <= system.r):
                raise MalformedIndices(
                    f"equation {k}: index ({i}, {j}) outside 1..{system.r}"
                )
            if i > j or (i == j and not system.include_squares):
                raise MalformedIndices(
                    f"equation {k}: index ({i}, {j}) must satisfy i < j"
                    + ("" if system.include_squares else " (include_squares is off)")
                )
            merged[i, j] += a
        terms = tuple((i, j, a) for (i, j), a in sorted(merged.items()) if a)
        equations.append(Equation(terms, eq.target))
    return QuadSystem(system.r, tuple(equations), system.include_squares)


########################
####    OUTCOMES    ####
########################


@dataclass(frozen=True)
class Solution:
    """An assignment satisfying every equation, checked on construction.

    Raises
    ------
    InternalError
        If the assignment does not satisfy the system.
    """

    system: QuadSystem = field(repr=False, compare=False)
    assignment: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.system.satisfied_by(self.assignment):
            raise InternalError(
                f"assignment {shorten_list(list(self.assignment))} does not satisfy "
                f"the system (residuals "
                f"{shorten_list(self.system.residuals(self.assignment))})"
            )

    def to_json(self) -> dict[str, Any]:
        """JSON form of the outcome."""
        return {"outcome": "Solution", "assignment": list(self.assignment)}


@dataclass(frozen=True)
class NoSolutionWithinBound:
    """No solution has every ``|x_i| <= bound``.  Says nothing beyond the box."""

    bound: int

    def to_json(self) -> dict[str, Any]:
        """JSON form of the outcome."""
        return {"outcome": "NoSolutionWithinBound", "bound": self.bound}


@dataclass(frozen=True)
class UnsatisfiableProof:
    """A certificate that no integer solution exists.

    Either `modulus` is set (no solution modulo it), or `witness` is
    ``"zero-form"`` and `equation` is a 1-based equation with no terms and a
    nonzero target.
    """

    modulus: int | None = None
    witness: str = "modulus"
    equation: int | None = None

    def to_json(self) -> dict[str, Any]:
        """JSON form of the outcome."""
        return {
            "outcome": "UnsatisfiableProof",
            "modulus": self.modulus,
            "witness": self.witness,
            "equation": self.equation,
        }


@dataclass(frozen=True)
class Inconclusive:
    """The modular filter found an assignment modulo `modulus`."""

    modulus: int

    def to_json(self) -> dict[str, Any]:
        """JSON form of the outcome."""
        return {"outcome": "Inconclusive", "modulus": self.modulus}


SolveOutcome = Solution | NoSolutionWithinBound | UnsatisfiableProof


def evaluate(system: QuadSystem, x: Sequence[int]) -> tuple[int, ...]:
    """The exact residual vector ``lhs_k(x) - b_k`` of a system at `x`.

    Raises
    ------
    ValueError
        If `x` does not have one value per variable.
    """
    return system.residuals(x)
