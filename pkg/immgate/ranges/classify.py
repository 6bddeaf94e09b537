"""Where immersion and embedding of manifolds in Euclidean space is decidable.

Every ``(m, n)`` pair and category gets exactly one status:

=================  =========================================================
AlwaysYes          every manifold in this range immerses (or embeds)
Decidable          an algorithm decides the question
Undecidable        no algorithm decides the question
Open               not known
OutOfTheoremScope  outside ``n >= 4, m < n`` (immersion) or ``m <= n``
=================  =========================================================

Verdicts never claim more than is proven: codimension 2 below ``n = 10`` and
closed manifolds in the embedding band are Open.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from ..homotopy import bg_stabilization_connectivity
from ..util.error import InvalidCodimension


class Kind(str, Enum):
    """Immersion or embedding."""

    IMMERSION = "Immersion"
    EMBEDDING = "Embedding"


class Category(str, Enum):
    """Smooth, locally flat PL, or general PL maps."""

    SMOOTH = "Smooth"
    PL_LOCALLY_FLAT = "PLLocallyFlat"
    PL_GENERAL = "PLGeneral"

    @classmethod
    def from_flag(cls, flag: str) -> Category:
        """Parse a command-line spelling such as ``pl-flat``.

        Raises
        ------
        ValueError
            If the spelling is unknown.
        """
        try:
            return _FLAGS[flag.lower()]
        except KeyError as err:
            raise ValueError(
                f"unknown category {repr(flag)} (expected one of {sorted(_FLAGS)})"
            ) from err


_FLAGS = {
    "smooth": Category.SMOOTH,
    "pl-flat": Category.PL_LOCALLY_FLAT,
    "pl": Category.PL_GENERAL,
}


class Status(str, Enum):
    """The decidability status of a range."""

    ALWAYS_YES = "AlwaysYes"
    DECIDABLE = "Decidable"
    UNDECIDABLE = "Undecidable"
    OPEN = "Open"
    OUT_OF_SCOPE = "OutOfTheoremScope"


@dataclass(frozen=True)
class ProblemSpec:
    """One classification question.

    `with_boundary` and `closed` both False means the boundary status was not
    stated.  Both True is contradictory and classifies as out of scope.
    """

    m: int
    n: int
    kind: Kind = Kind.IMMERSION
    category: Category = Category.SMOOTH
    orientable: bool = True
    with_boundary: bool = False
    closed: bool = False

    @property
    def codim(self) -> int:
        """``n - m``."""
        return self.n - self.m


@dataclass(frozen=True)
class RangeVerdict:
    """A status with the method or reduction behind it and where it comes from."""

    status: Status
    method: str
    citation: str
    range: str
    tags: tuple[str, ...] = ()
    notes: tuple[str, ...] = field(default=())

    def to_json(self) -> dict[str, Any]:
        """The ``range-verdict`` payload."""
        return {
            "status": self.status.value,
            "method": self.method,
            "citation": self.citation,
            "range": self.range,
            "tags": list(self.tags),
            "notes": list(self.notes),
        }


@dataclass(frozen=True)
class Stabilization:
    """``M^m -> R^n`` immerses iff ``M x D^k`` embeds in ``R^(n+k)``."""

    k: int
    m: int
    n: int

    def to_json(self) -> dict[str, Any]:
        """The ``stabilization`` payload."""
        return {"k": self.k, "m": self.m, "n": self.n}


##########################
####    BAND NAMES    ####
##########################


def immersion_range(m: int, n: int) -> str:
    """The named band of ``(m, n)`` for immersions.

    Examples
    --------
    >>> immersion_range(7, 15)
    'stable'
    >>> immersion_range(8, 10)
    'codimension 2'
    """
    codim = n - m
    if 2 * m < n + 2:
        return "stable"
    if codim == 1:
        return "codimension 1"
    if codim == 2:
        return "codimension 2"
    if 3 * m <= 2 * n - 1:
        return "metastable"
    if 5 * m < 4 * n:
        return "two-thirds to four-fifths"
    return "four-fifths to codimension 3"


def embedding_range(m: int, n: int) -> str:
    """The named band of ``(m, n)`` for embeddings."""
    if 2 * m <= n:
        return "stable"
    if 3 * m <= 2 * n - 3:
        return "metastable"
    if 11 * m < 10 * n + 1:
        return "two-thirds to ten-elevenths"
    return "above ten-elevenths"


#######################
####    PRIVATE    ####
#######################


def _out_of_scope(spec: ProblemSpec, reason: str) -> RangeVerdict:
    return RangeVerdict(
        Status.OUT_OF_SCOPE,
        method="none",
        citation="scope",
        range="none",
        notes=(reason,),
    )


def _smooth_immersion(spec: ProblemSpec, band: str) -> RangeVerdict:
    m, n, codim = spec.m, spec.n, spec.codim
    if codim == 1:
        return RangeVerdict(
            Status.DECIDABLE,
            method="nullhomotopy of the normal line bundle classifier",
            citation="codimension-one-immersion",
            range=band,
        )
    if codim % 2:
        return RangeVerdict(
            Status.DECIDABLE,
            method="rational Pontryagin window then finite lifting search",
            citation="odd-codimension-lifting",
            range=band,
        )
    if 3 * m <= 2 * n - 1:
        return RangeVerdict(
            Status.DECIDABLE,
            method="metastable lift through BSO_{n-m}",
            citation="metastable-lifting",
            range=band,
        )
    # codim 2 lands here only for n >= 10
    if 5 * m >= 4 * n:
        return RangeVerdict(
            Status.UNDECIDABLE,
            method="reduction from quadratic Diophantine systems via e^2 = p",
            citation="even-codimension-euler-square",
            range=band,
            tags=("codim-2-n-ge-10",) if codim == 2 else (),
        )
    return RangeVerdict(
        Status.OPEN,
        method="none",
        citation="even-codimension-gap",
        range=band,
        notes=("smooth immersibility in this even-codimension band is unknown",),
    )


def _pl_immersion(spec: ProblemSpec, band: str) -> RangeVerdict:
    codim = spec.codim
    notes = (
        f"BG_{codim} -> BG is {bg_stabilization_connectivity(codim)}-connected",
    ) if codim >= 2 else ()
    if codim == 2 and spec.category is Category.PL_LOCALLY_FLAT:
        if spec.n >= 10:
            return RangeVerdict(
                Status.UNDECIDABLE,
                method="reduction from quadratic Diophantine systems via e^2 = p",
                citation="locally-flat-codimension-two",
                range=band,
                tags=("codim-2-n-ge-10",),
                notes=notes,
            )
        return RangeVerdict(
            Status.OPEN,
            method="none",
            citation="locally-flat-codimension-two",
            range=band,
            notes=notes
            + ("locally flat codim 2 is only known undecidable for n >= 10",),
        )
    if codim == 2:
        return RangeVerdict(
            Status.DECIDABLE,
            method="lift through BG_2, not necessarily locally flat",
            citation="pl-codimension-two",
            range=band,
            notes=notes,
        )
    return RangeVerdict(
        Status.DECIDABLE,
        method="lift through BG_{n-m} with finite homotopy groups",
        citation="pl-immersion-lifting",
        range=band,
        notes=notes,
    )


######################
####    PUBLIC    ####
######################


def classify_immersion(spec: ProblemSpec) -> RangeVerdict:
    """Classify the immersion problem for ``m``-manifolds in ``R^n``.

    Parameters
    ----------
    spec : ProblemSpec
        The question.  `kind` is ignored.

    Returns
    -------
    RangeVerdict
        ``OutOfTheoremScope`` when ``n < 4`` or ``m`` is not in ``1 .. n-1``.
        Non-orientable manifolds get the same status, tagged ``equivariant``.

    Examples
    --------
    >>> classify_immersion(ProblemSpec(8, 10)).status
    <Status.UNDECIDABLE: 'Undecidable'>
    >>> classify_immersion(ProblemSpec(10, 14)).status
    <Status.OPEN: 'Open'>
    """
    m, n = spec.m, spec.n
    if n < 4:
        return _out_of_scope(spec, f"n = {n} < 4")
    if not 1 <= m < n:
        return _out_of_scope(spec, f"m = {m} is not in 1..{n - 1}")
    if spec.with_boundary and spec.closed:
        return _out_of_scope(spec, "a manifold cannot be both closed and bounded")

    band = immersion_range(m, n)
    if spec.category is Category.SMOOTH and 2 * m < n + 2:
        verdict = RangeVerdict(
            Status.ALWAYS_YES,
            method="general position",
            citation="whitney-immersion-theorem",
            range=band,
        )
    elif spec.category is Category.SMOOTH:
        verdict = _smooth_immersion(spec, band)
    else:
        verdict = _pl_immersion(spec, band)

    if not spec.orientable:
        verdict = RangeVerdict(
            verdict.status,
            verdict.method,
            verdict.citation,
            verdict.range,
            verdict.tags + ("equivariant",),
            verdict.notes
            + ("non-orientable: the same argument on the orientation cover",),
        )
    return verdict


def classify_embedding(spec: ProblemSpec) -> RangeVerdict:
    """Classify the embedding problem for ``m``-manifolds in ``R^n``.

    Parameters
    ----------
    spec : ProblemSpec
        The question.  `kind` is ignored.

    Returns
    -------
    RangeVerdict
        ``AlwaysYes`` for ``2m <= n``, ``Decidable`` for ``3m <= 2n - 3``,
        ``Undecidable`` for smooth manifolds with boundary when ``n - m`` is
        even and ``11m >= 10n + 1``, otherwise ``Open``.

    Notes
    -----
    The undecidable band comes from stabilizing the immersion problem for
    ``(4c, 5c)``.  Closed manifolds in that band have vanishing normal Euler
    class, so the reduction does not apply and the status is Open.
    """
    m, n = spec.m, spec.n
    if m < 1 or m > n:
        return _out_of_scope(spec, f"m = {m} is not in 1..{n}")
    if spec.with_boundary and spec.closed:
        return _out_of_scope(spec, "a manifold cannot be both closed and bounded")

    band = embedding_range(m, n)
    if 2 * m <= n:
        return RangeVerdict(
            Status.ALWAYS_YES,
            method="general position",
            citation="whitney-embedding-theorem",
            range=band,
        )
    if 3 * m <= 2 * n - 3:
        return RangeVerdict(
            Status.DECIDABLE,
            method="equivariant maps of the deleted product",
            citation="cadek-krcal-vokrinek",
            range=band,
        )
    if (
        spec.category is Category.SMOOTH
        and spec.codim % 2 == 0
        and 11 * m >= 10 * n + 1
    ):
        if spec.with_boundary:
            return RangeVerdict(
                Status.UNDECIDABLE,
                method="stabilized immersion problem: M x D^k embeds iff M immerses",
                citation="stabilized-euler-square",
                range=band,
            )
        if spec.closed:
            return RangeVerdict(
                Status.OPEN,
                method="none",
                citation="closed-embedding-euler-class",
                range=band,
                notes=(
                    "closed manifolds embed with vanishing normal Euler class; "
                    "this cannot come from immersion theory",
                ),
            )
        return RangeVerdict(
            Status.OPEN,
            method="none",
            citation="stabilized-euler-square",
            range=band,
            notes=(
                "undecidable for manifolds with boundary; "
                "state --boundary or --closed",
            ),
        )
    return RangeVerdict(
        Status.OPEN,
        method="none",
        citation="embedding-gap",
        range=band,
    )


def embedding_stabilization(m: int, n: int) -> Stabilization:
    """The product with ``D^k`` that turns immersion into embedding.

    Parameters
    ----------
    m : int
        The manifold dimension.
    n : int
        The target dimension, at least ``m + 2``.

    Returns
    -------
    Stabilization
        ``k = max(4m - 2n + 1, 1)`` and ``(m + k, n + k)``.

    Raises
    ------
    InvalidCodimension
        If ``n < m + 2``.

    Examples
    --------
    >>> embedding_stabilization(8, 10)
    Stabilization(k=13, m=21, n=23)
    """
    if n < m + 2:
        raise InvalidCodimension(f"stabilization needs n >= m + 2, not (m={m}, n={n})")
    k = max(4 * m - 2 * n + 1, 1)
    return Stabilization(k, m + k, n + k)
