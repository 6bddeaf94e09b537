"""Homotopy groups of ``G_n``, the monoid of self homotopy equivalences of ``S^{n-1}``.

Evaluation at a base point gives a fibration ``F_{n-1} -> G_n -> S^{n-1}`` and
with it the exact sequence

    pi_{n+k-1}(S^{n-1}) --i_*--> pi_k(G_n) --j_*--> pi_k(S^{n-1}) --phi_k--> pi_{n+k-2}(S^{n-1})

where ``phi_k(f) = [f, i_{n-1}]``.  ``pi_k(G_n)`` is therefore an extension of
``ker phi_k`` by ``coker phi_{k+1}``.  This module computes both ends from the
sphere tables and resolves the extension only where that is provably possible.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from ..algebra import FGAbelianGroup, Homomorphism, coprime
from ..env.messages import DEBUG, WARN
from ..tables import SphereTable, default_table
from ..util.error import MissingCompositionData, OutOfTable


class CaseTag(str, Enum):
    """Which rule of the computation applied to a given ``(n, k)``."""

    GENERIC = "generic"
    K0 = "k0"
    K_EQ_N_MINUS_2_N_ODD = "k_eq_n_minus_2_n_odd"
    K_EQ_N_MINUS_1_N_EVEN = "k_eq_n_minus_1_n_even"
    K_EQ_2N_MINUS_3_N_ODD = "k_eq_2n_minus_3_n_odd"
    STABLE = "stable"


class State(str, Enum):
    """How much of ``pi_k(G_n)`` could be determined."""

    RESOLVED = "resolved"
    EXTENSION_UNRESOLVED = "extension_unresolved"
    BOUNDS = "bounds"


@dataclass(frozen=True)
class GnGroupResult:
    """``pi_k(G_n)`` as far as it can be determined.

    `sub` is the image of ``i_*`` and `quotient` is ``ker phi_k``.  When the
    extension ``0 -> sub -> pi_k(G_n) -> quotient -> 0`` is provably split or
    one end is trivial, `resolved` holds the isomorphism type.  When the image
    of ``phi_{k+1}`` is unknown, `sub` is None and `sub_bound` is the group it
    is a quotient of.
    """

    n: int
    k: int
    case_tag: CaseTag
    resolved: FGAbelianGroup | None = None
    sub: FGAbelianGroup | None = None
    quotient: FGAbelianGroup | None = None
    sub_bound: FGAbelianGroup | None = None
    notes: tuple[str, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.resolved is None and self.quotient is None:
            raise ValueError("an unresolved result needs the quotient ker(phi_k)")
        if (
            self.sub is not None
            and self.quotient is not None
            and self.resolved is not None
        ):
            a, b, ab = self.sub.order, self.quotient.order, self.resolved.order
            if a is not None and b is not None and a * b != ab:
                raise ValueError(
                    f"|{self.resolved}| != |{self.sub}| * |{self.quotient}|"
                )

    @property
    def state(self) -> State:
        """Whether the group is resolved, an unresolved extension, or bounded."""
        if self.resolved is not None:
            return State.RESOLVED
        if self.sub is None:
            return State.BOUNDS
        return State.EXTENSION_UNRESOLVED

    @property
    def order(self) -> int | None:
        """``|pi_k(G_n)|`` when determined and finite, else None.

        An unresolved extension still has a known order, the product of the
        orders of its ends.
        """
        if self.resolved is not None:
            return self.resolved.order
        if self.sub is None or self.quotient is None:
            return None
        if self.sub.order is None or self.quotient.order is None:
            return None
        return self.sub.order * self.quotient.order

    def to_json(self) -> dict[str, Any]:
        """A JSON-ready description of the result."""
        def group(g: FGAbelianGroup | None) -> dict[str, Any] | None:
            return None if g is None else g.to_json()

        return {
            "n": self.n,
            "k": self.k,
            "case_tag": self.case_tag.value,
            "state": self.state.value,
            "resolved": group(self.resolved),
            "ses": None if self.quotient is None else {
                "sub": group(self.sub),
                "quotient": group(self.quotient),
            },
            "sub_bound": group(self.sub_bound),
            "order": self.order,
            "notes": list(self.notes),
        }


#######################
####    PRIVATE    ####
#######################


def _case(n: int, k: int) -> CaseTag:
    if k == 0:
        return CaseTag.K0
    if n >= k + 3:
        return CaseTag.STABLE
    if k == n - 2 and n % 2:
        return CaseTag.K_EQ_N_MINUS_2_N_ODD
    if k == n - 1 and n % 2 == 0:
        return CaseTag.K_EQ_N_MINUS_1_N_EVEN
    if k == 2 * n - 3 and n % 2:
        return CaseTag.K_EQ_2N_MINUS_3_N_ODD
    return CaseTag.GENERIC


def _resolve(
    sub: FGAbelianGroup,
    quotient: FGAbelianGroup,
) -> tuple[FGAbelianGroup | None, str | None]:
    if quotient.is_trivial:
        return sub, None
    if sub.is_trivial:
        return quotient, None
    if quotient.is_free:
        return sub.direct_sum(quotient), "split: quotient is free"
    if coprime(sub, quotient):
        return sub.direct_sum(quotient), "split: orders are coprime"
    return None, None


######################
####    PUBLIC    ####
######################


def phi_map(n: int, k: int, table: SphereTable | None = None) -> Homomorphism:
    """The homomorphism ``phi_k : pi_k(S^{n-1}) -> pi_{n+k-2}(S^{n-1})``.

    Parameters
    ----------
    n : int
        The index of ``G_n``, at least 2.
    k : int
        The homotopy degree, at least 0.
    table : SphereTable | None, default None
        The tables to use.  Defaults to :func:`immgate.tables.default_table`.

    Returns
    -------
    Homomorphism
        The map in the canonical generators of both groups.  It is zero when
        either group is trivial or when ``[i_{n-1}, i_{n-1}] = 0``.

    Raises
    ------
    ValueError
        If `n` < 2 or `k` < 0.
    OutOfTable
        If either group is outside the tables.
    MissingCompositionData
        If the map is not forced to vanish and no composition entry is bundled.
        The map is then unknown, not zero.
    """
    if n < 2 or k < 0:
        raise ValueError(f"phi_k is defined for n >= 2 and k >= 0, not (n={n}, k={k})")
    table = table or default_table()
    p = n - 1
    domain = table.pi_sphere(p, k)
    codomain = table.pi_sphere(p, n + k - 2)
    if domain.is_trivial or codomain.is_trivial:
        return Homomorphism.zero(domain, codomain)
    if table.whitehead_square(p).order == 1:
        return Homomorphism.zero(domain, codomain)
    entry = table.composition(n, k)
    return Homomorphism(domain, codomain, entry.matrix)


def pi_gn(n: int, k: int, table: SphereTable | None = None) -> GnGroupResult:
    """Compute ``pi_k(G_n)``.

    Parameters
    ----------
    n : int
        The index of ``G_n``, at least 1.
    k : int
        The homotopy degree, at least 0.
    table : SphereTable | None, default None
        The tables to use.  Defaults to :func:`immgate.tables.default_table`.

    Returns
    -------
    GnGroupResult
        The group, an unresolved extension, or bounds when the image of
        ``phi_{k+1}`` cannot be computed.

    Raises
    ------
    ValueError
        If `n` < 1 or `k` < 0.
    OutOfTable
        If a group in the exact sequence is outside the tables.
    MissingCompositionData
        If ``phi_k`` is needed and unknown.

    Notes
    -----
    ``G_n`` always has two components, so ``pi_0 = Z/2``.  When ``k = 2n - 3``
    with n odd, or ``k = n - 1`` with n even, the kernel of ``phi_k`` is
    infinite cyclic and is taken as such without consulting the tables.
    An extension is only resolved when one end is trivial, the quotient is free,
    or the two orders are coprime.
    """
    if n < 1 or k < 0:
        raise ValueError(f"pi_k(G_n) needs n >= 1 and k >= 0, not (n={n}, k={k})")
    table = table or default_table()
    tag = _case(n, k)
    if tag is CaseTag.K0:
        return GnGroupResult(
            n, k, tag, resolved=FGAbelianGroup.cyclic(2), notes=("two components",)
        )
    if n == 1:
        # G_1 is the discrete group of self maps of S^0
        return GnGroupResult(n, k, tag, resolved=FGAbelianGroup.trivial())

    notes: list[str] = []
    if tag is CaseTag.K_EQ_2N_MINUS_3_N_ODD:
        quotient = FGAbelianGroup.integers()
        notes.append("ker(phi_k) = Z")
    elif tag is CaseTag.K_EQ_N_MINUS_1_N_EVEN:
        # [i_{n-1}, i_{n-1}] has order 1 or 2, so ker(phi_k) is Z or 2Z
        quotient = FGAbelianGroup.integers()
        notes.append("ker(phi_k) = Z")
    else:
        quotient = phi_map(n, k, table).kernel()

    bound = table.pi_sphere(n - 1, n + k - 1)
    sub: FGAbelianGroup | None
    try:
        sub = phi_map(n, k + 1, table).cokernel()
    except (OutOfTable, MissingCompositionData) as err:
        WARN(f"pi_{k}(G_{n}): image of phi_{k + 1} unknown ({err}); reporting bounds")
        sub = None
        notes.append(f"sub is a quotient of {bound} by an unknown subgroup")

    resolved = None
    if sub is not None:
        resolved, reason = _resolve(sub, quotient)
        if reason:
            notes.append(reason)
    DEBUG(f"pi_{k}(G_{n}): sub={sub}, quotient={quotient}, resolved={resolved}")
    return GnGroupResult(
        n,
        k,
        tag,
        resolved=resolved,
        sub=sub,
        quotient=quotient,
        sub_bound=bound if sub is None else None,
        notes=tuple(notes),
    )


def bg_infinite_dim(codim: int) -> int:
    """The degree of the unique infinite homotopy group of ``BG_{codim}``.

    Parameters
    ----------
    codim : int
        The codimension ``n - m``, at least 2.

    Returns
    -------
    int
        `codim` if it is even, else ``2 * codim - 2``.

    Raises
    ------
    ValueError
        If `codim` < 2.
    """
    if codim < 2:
        raise ValueError(f"codimension must be at least 2, not {codim}")
    return codim if codim % 2 == 0 else 2 * codim - 2


def bg_stabilization_connectivity(codim: int) -> int:
    """The connectivity of the stabilization ``BG_{codim} -> BG``, i.e. ``codim - 2``.

    Raises
    ------
    ValueError
        If `codim` < 2.
    """
    if codim < 2:
        raise ValueError(f"codimension must be at least 2, not {codim}")
    return codim - 2
