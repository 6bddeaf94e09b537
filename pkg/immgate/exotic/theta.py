"""Groups of homotopy spheres from the surgery exact sequence.

``Theta_k`` sits in the exact sequence

    0 -> bP_{k+1} -> Theta_k -> coker J_k -> P_k

where ``P_k`` is 0, ``Z/2`` or ``Z`` as ``k`` is odd, ``2 mod 4`` or ``0 mod 4``,
and the last map is the surgery obstruction (Kervaire invariant or signature
over 8) of a framed manifold bounding the sphere.  The order of ``bP_{k+1}``
is a closed formula in Bernoulli numbers; the kernel of the last map is read
from the bundled tables.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from ..algebra import FGAbelianGroup, IntMatrix, QuadraticRefinement
from ..algebra import arf_invariant, bernoulli, signature
from ..env.messages import DEBUG
from ..tables import SphereTable, default_table
from ..util.error import (
    NonEvenForm,
    NonIntegralR,
    NonUnimodularForm,
    OutOfTable,
    SignatureNotDivisibleBy8,
    TableFormatError,
    WrongParity,
)


KERVAIRE_DIMENSIONS = frozenset({2, 6, 14, 30, 62, 126})
MAX_BP_DIMENSION = 30
THETA_WINDOW = range(1, 19)


@dataclass(frozen=True)
class ThetaAssembly:
    """The pieces of the exact sequence for ``Theta_k``.

    Attributes
    ----------
    k : int
        The dimension.
    bp : FGAbelianGroup
        ``bP_{k+1}``, always cyclic.
    coker_j : FGAbelianGroup
        The stable stem modulo the image of J.
    p_target : FGAbelianGroup
        ``P_k``.
    phi_image_order : int
        The order of the image of ``coker J -> P_k``.
    theta_order : int
        ``|bP_{k+1}| * |ker(coker J -> P_k)|``.
    resolved_group : FGAbelianGroup | None
        The isomorphism type of ``Theta_k`` when the tables record it.
    """

    k: int
    bp: FGAbelianGroup
    coker_j: FGAbelianGroup
    p_target: FGAbelianGroup
    phi_image_order: int
    theta_order: int
    resolved_group: FGAbelianGroup | None = None

    def __post_init__(self) -> None:
        group = self.resolved_group
        if group is not None and group.order != self.theta_order:
            raise TableFormatError(
                f"Theta_{self.k}: recorded group {self.resolved_group} does not have "
                f"order {self.theta_order}"
            )

    @property
    def kernel_order(self) -> int:
        """``|ker(coker J -> P_k)|``."""
        return self.theta_order // (self.bp.order or 1)

    def to_json(self) -> dict[str, Any]:
        """The ``theta-assembly`` payload."""
        return {
            "k": self.k,
            "bp": self.bp.to_json(),
            "coker_j": self.coker_j.to_json(),
            "p_target": self.p_target.to_json(),
            "phi_image_order": self.phi_image_order,
            "kernel_order": self.kernel_order,
            "theta_order": self.theta_order,
            "resolved_group": (
                None if self.resolved_group is None else self.resolved_group.to_json()
            ),
        }


######################
####    PUBLIC    ####
######################


def kervaire_dimension(d: int) -> bool:
    """Whether a framed ``d``-manifold of Kervaire invariant one exists."""
    return d in KERVAIRE_DIMENSIONS


def p_group(k: int) -> FGAbelianGroup:
    """``P_k``: 0 for k odd, ``Z/2`` for ``k = 2 mod 4`` and ``Z`` for ``k = 0 mod 4``.

    Raises
    ------
    ValueError
        If `k` < 1.
    """
    if k < 1:
        raise ValueError(f"P_k is defined for k >= 1, not {k}")
    if k % 2:
        return FGAbelianGroup.trivial()
    if k % 4 == 2:
        return FGAbelianGroup.cyclic(2)
    return FGAbelianGroup.integers()


def bp_order(kplus1: int) -> int:
    """The order of ``bP_{k+1}``, the spheres bounding parallelizable manifolds.

    Parameters
    ----------
    kplus1 : int
        The dimension of the bounding manifold, ``2 <= kplus1 <= 30``.

    Returns
    -------
    int
        ``2^(2m-2) (2^(2m-1) - 1) numerator(4 B_m / m)`` for ``kplus1 = 4m``
        with ``m >= 2``; 1 for ``kplus1 = 4``; 1 or 2 for ``kplus1 = 4m + 2``
        depending on whether the Kervaire invariant is realized; 1 for odd
        ``kplus1``.

    Raises
    ------
    ValueError
        If `kplus1` < 2.
    OutOfTable
        If `kplus1` > 30.

    Examples
    --------
    >>> bp_order(8), bp_order(12), bp_order(16)
    (28, 992, 8128)
    """
    if kplus1 < 2:
        raise ValueError(f"bP_(k+1) needs k+1 >= 2, not {kplus1}")
    if kplus1 > MAX_BP_DIMENSION:
        raise OutOfTable(f"bP_{kplus1} is outside the window 2..{MAX_BP_DIMENSION}")
    if kplus1 % 2:
        return 1
    if kplus1 % 4 == 2:
        return 1 if kervaire_dimension(kplus1) else 2
    m = kplus1 // 4
    if m == 1:
        return 1
    ratio = 4 * bernoulli(m) / m
    return 2 ** (2 * m - 2) * (2 ** (2 * m - 1) - 1) * ratio.numerator


def bp_divisor_expression(kplus1: int, r_convention: str = "half") -> int:
    """``2^(2r-1) (2^(2r-1) - 1) numerator(B_r / r)`` for a chosen reading of ``r``.

    The expression is kept for comparison with :func:`bp_order`.  With
    ``r = (k+1)/2`` it gives 16256 for ``k+1 = 8``, which is not divisible by
    ``|bP_8| = 28``; with ``r = (k+1)/4`` it gives 56.

    Parameters
    ----------
    kplus1 : int
        A positive even dimension.
    r_convention : {"half", "quarter"}, default "half"
        ``r = kplus1 / 2`` or ``r = kplus1 / 4``.

    Returns
    -------
    int
        The value of the expression.

    Raises
    ------
    ValueError
        If the convention is unknown or `kplus1` < 2.
    NonIntegralR
        If ``r`` is not an integer under the chosen convention.
    """
    divisors = {"half": 2, "quarter": 4}
    if r_convention not in divisors:
        raise ValueError(
            f"convention must be 'half' or 'quarter', not {repr(r_convention)}"
        )
    if kplus1 < 2:
        raise ValueError(f"k+1 must be at least 2, not {kplus1}")
    r, rem = divmod(kplus1, divisors[r_convention])
    if rem:
        raise NonIntegralR(f"r = {kplus1}/{divisors[r_convention]} is not an integer")
    b = bernoulli(r) / r
    return 2 ** (2 * r - 1) * (2 ** (2 * r - 1) - 1) * b.numerator


def coker_j(k: int, table: SphereTable | None = None) -> FGAbelianGroup:
    """The stable stem ``pi_k^s`` modulo the image of J.

    Raises
    ------
    OutOfTable
        If stem `k` is not tabulated.
    TableFormatError
        If the image of J is not an invariant factor of the stem.
    """
    table = table or default_table()
    stem = table.stable_stem(k)
    image = table.im_j_order(k)
    if image == 1:
        return stem
    if image not in stem.torsion:
        raise TableFormatError(f"image of J (order {image}) is not a summand of {stem}")
    torsion = list(stem.torsion)
    torsion.remove(image)
    return FGAbelianGroup.from_orders(*([0] * stem.free_rank), *torsion)


def theta_assembly(k: int, table: SphereTable | None = None) -> ThetaAssembly:
    """Assemble ``Theta_k`` for ``1 <= k <= 18``.

    Parameters
    ----------
    k : int
        The dimension.
    table : SphereTable | None, default None
        The tables to use.

    Returns
    -------
    ThetaAssembly
        With ``theta_order = |bP_{k+1}| * |ker(coker J -> P_k)|`` and the
        tabulated group when there is one.

    Raises
    ------
    OutOfTable
        If `k` is outside ``1 .. 18``.
    TableFormatError
        If the kernel order does not divide ``|coker J|``, or the tabulated
        ``Theta_k`` disagrees with the assembled order.
    """
    if k not in THETA_WINDOW:
        raise OutOfTable(
            f"Theta_{k} is outside the window "
            f"{THETA_WINDOW.start}..{THETA_WINDOW.stop - 1}"
        )
    table = table or default_table()
    bp = FGAbelianGroup.cyclic(bp_order(k + 1))
    cj = coker_j(k, table)
    kernel = table.kernel_phi(k)
    order = cj.order
    if order is None or order % kernel:
        raise TableFormatError(f"kernel order {kernel} does not divide |{cj}|")
    theta_order = (bp.order or 1) * kernel
    recorded, group = table.theta(k)
    if recorded != theta_order:
        raise TableFormatError(
            f"Theta_{k}: assembled order {theta_order} != tabulated {recorded}"
        )
    DEBUG(f"Theta_{k}: bP={bp}, coker J={cj}, |ker phi|={kernel}")
    return ThetaAssembly(
        k,
        bp=bp,
        coker_j=cj,
        p_target=p_group(k),
        phi_image_order=order // kernel,
        theta_order=theta_order,
        resolved_group=group,
    )


def surgery_invariant(k: int, form: IntMatrix | QuadraticRefinement) -> int:
    """The obstruction to surgering a framed ``k``-manifold to a sphere.

    Parameters
    ----------
    k : int
        The dimension, even.
    form : IntMatrix | QuadraticRefinement
        A quadratic refinement of the intersection form mod 2 when
        ``k = 2 mod 4``; an even unimodular symmetric form when ``k = 0 mod 4``.

    Returns
    -------
    int
        The Arf invariant, or the signature divided by 8.

    Raises
    ------
    WrongParity
        If `k` is odd or the form does not match ``k mod 4``.
    NonEvenForm
        If a diagonal entry is odd.
    NonUnimodularForm
        If the determinant is not ``+-1``.
    SignatureNotDivisibleBy8
        If the signature is not a multiple of 8.

    Examples
    --------
    The ``E8`` form in dimension 8 gives 1; ``H + H`` gives 0.
    """
    if k % 2:
        raise WrongParity(f"surgery obstructions live in even dimensions, not {k}")
    if k % 4 == 2:
        if not isinstance(form, QuadraticRefinement):
            raise WrongParity(f"k = {k} = 2 mod 4 needs a quadratic refinement")
        return arf_invariant(form)
    if not isinstance(form, IntMatrix):
        raise WrongParity(f"k = {k} = 0 mod 4 needs a symmetric integer form")
    if not form.is_symmetric():
        raise ValueError("the intersection form must be symmetric")
    if any(d % 2 for d in form.diagonal()):
        raise NonEvenForm(f"form has odd diagonal entries: {form.diagonal()}")
    if not form.is_unimodular():
        raise NonUnimodularForm(f"form has determinant {form.determinant()}, not +-1")
    sigma = signature(form)
    if sigma % 8:
        raise SignatureNotDivisibleBy8(f"signature {sigma} is not a multiple of 8")
    return sigma // 8
