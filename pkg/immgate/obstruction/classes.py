"""Characteristic-class data for a manifold, supplied as input.

Nothing here is computed from a triangulation.  A :class:`ManifoldClassData`
records the integral cohomology in the degrees a test looks at, Pontryagin
classes as coordinates in the free part of ``H^{4i}``, and optionally the cup
pairings ``H^c x H^c -> H^{2c}`` for one declared ``c``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Mapping

from ..algebra import FGAbelianGroup, IntMatrix
from ..util.error import SchemaError


@dataclass(frozen=True)
class MiddleForms:
    """Cup pairings ``H^c x H^c -> H^{2c}``, one symmetric matrix per basis class.

    Entry ``(i, j)`` of form ``k`` is the coefficient of ``x_i x_j`` in the
    ``k``-th coordinate of ``e^2`` for ``e = sum x_i e_i``, counted once per
    unordered pair.
    """

    c: int
    forms: tuple[IntMatrix, ...] = ()

    def __post_init__(self) -> None:
        if self.c < 1:
            raise SchemaError(f"middle degree must be positive, not {self.c}")
        sizes = {(f.rows, f.cols) for f in self.forms}
        if len(sizes) > 1:
            raise SchemaError(f"middle forms have differing shapes: {sorted(sizes)}")
        for k, form in enumerate(self.forms, start=1):
            if not form.is_square() or not form.is_symmetric():
                raise SchemaError(f"middle form {k} is not a symmetric square matrix")

    @property
    def rank(self) -> int | None:
        """The rank of ``H^c`` implied by the forms, if any are given."""
        return self.forms[0].rows if self.forms else None


@dataclass(frozen=True)
class ManifoldClassData:
    """Characteristic-class data of a closed (or bounded) manifold.

    Attributes
    ----------
    m : int
        The dimension.
    orientable : bool
        Whether the manifold is orientable.
    cohomology : Mapping[int, FGAbelianGroup]
        ``H^d`` for the degrees that were declared.
    pontryagin : Mapping[int, tuple[int, ...]]
        Coordinates of ``p_i`` in a basis of the free part of ``H^{4i}``.
    middle : MiddleForms | None
        Cup pairings for one declared degree.
    closed : bool
        Whether the manifold is closed, as asserted by the caller.
    """

    m: int
    orientable: bool = True
    cohomology: Mapping[int, FGAbelianGroup] = field(default_factory=dict)
    pontryagin: Mapping[int, tuple[int, ...]] = field(default_factory=dict)
    middle: MiddleForms | None = None
    closed: bool = True

    def __post_init__(self) -> None:
        if self.m < 0:
            raise SchemaError(f"dimension must be non-negative, not {self.m}")
        for degree in self.cohomology:
            if not 0 <= degree <= self.m:
                raise SchemaError(f"cohomology degree {degree} outside 0..{self.m}")
        for i, coords in self.pontryagin.items():
            if i < 1 or 4 * i > self.m:
                raise SchemaError(f"p_{i} lives in degree {4 * i} > m = {self.m}")
            rank = self.free_rank(4 * i)
            if rank is not None and len(coords) != rank:
                raise SchemaError(
                    f"p_{i} has {len(coords)} coordinates but H^{4 * i} has "
                    f"free rank {rank}"
                )
        if self.middle is not None:
            c = self.middle.c
            rank = self.free_rank(c)
            if rank is not None and self.middle.rank not in (None, rank):
                raise SchemaError(
                    f"middle forms are {self.middle.rank}x{self.middle.rank} but "
                    f"H^{c} has free rank {rank}"
                )
            classes = self.free_rank(2 * c)
            if classes is not None and len(self.middle.forms) != classes:
                raise SchemaError(
                    f"{len(self.middle.forms)} middle forms given but H^{2 * c} "
                    f"has free rank {classes}"
                )

    def free_rank(self, degree: int) -> int | None:
        """The free rank of ``H^degree`` if that group was declared."""
        group = self.cohomology.get(degree)
        return None if group is None else group.free_rank

    def torsion_in(self, degree: int) -> bool:
        """Whether ``H^degree`` was declared with torsion."""
        group = self.cohomology.get(degree)
        return group is not None and not group.is_free

    def pontryagin_class(self, i: int) -> tuple[int, ...] | None:
        """Coordinates of ``p_i``, or None if unknown.

        ``p_i`` is zero when ``4i > m`` or when ``H^{4i}`` is declared with free
        rank 0, even if no coordinates were given.
        """
        if i in self.pontryagin:
            return tuple(self.pontryagin[i])
        if 4 * i > self.m or self.free_rank(4 * i) == 0:
            return ()
        return None

    ##########################
    ####    JSON CODEC    ####
    ##########################

    def to_json(self) -> dict[str, Any]:
        """The ``manifold-class-data`` document (without a schema tag)."""
        doc: dict[str, Any] = {
            "m": self.m,
            "orientable": self.orientable,
            "closed": self.closed,
            "cohomology": {
                str(d): {"rank": g.free_rank, "torsion": list(g.torsion)}
                for d, g in sorted(self.cohomology.items())
            },
            "pontryagin": {
                str(i): list(v) for i, v in sorted(self.pontryagin.items())
            },
        }
        if self.middle is not None:
            doc["middle"] = {
                "c": self.middle.c,
                "forms": [f.to_list() for f in self.middle.forms],
            }
        return doc

    @classmethod
    def from_json(cls, doc: Mapping[str, Any]) -> ManifoldClassData:
        """Decode a ``manifold-class-data`` document.

        Raises
        ------
        SchemaError
            If a field is missing, mistyped, or inconsistent.
        """
        try:
            cohomology = {
                int(d): FGAbelianGroup.from_json(g)
                for d, g in doc.get("cohomology", {}).items()
            }
            pontryagin = {
                int(i): tuple(int(x) for x in v)
                for i, v in doc.get("pontryagin", {}).items()
            }
            middle = None
            if doc.get("middle") is not None:
                raw = doc["middle"]
                middle = MiddleForms(
                    int(raw["c"]),
                    tuple(IntMatrix.from_rows(f) for f in raw.get("forms", [])),
                )
            return cls(
                m=int(doc["m"]),
                orientable=bool(doc.get("orientable", True)),
                cohomology=cohomology,
                pontryagin=pontryagin,
                middle=middle,
                closed=bool(doc.get("closed", True)),
            )
        except (KeyError, TypeError, ValueError) as err:
            if isinstance(err, SchemaError):
                raise
            raise SchemaError(f"malformed manifold class data: {err}") from err
