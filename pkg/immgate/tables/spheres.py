"""Reference tables for homotopy groups of spheres.

The bundled data file lists unstable groups ``pi_k(S^n)`` with ``k - n <= 10``,
the stable stems through degree 19, orders of Whitehead squares and of the
image of J, a few composition maps needed by :mod:`immgate.homotopy.gn`, and the
groups of homotopy spheres used by :mod:`immgate.exotic.theta`.  Everything
outside that window raises :class:`OutOfTable`, which callers must report as
unsupported rather than trivial.

The file format is line oriented::

    SPHERETABLE v1 <sha256 of everything after the header line>
    PI n k rank d1,d2,...#label,label
    WSQ n order note
    IMJ k order
    CMP n k row;row;...
    THETA k order d1,d2,...
    KERPHI k order

Blank lines and lines starting with ``#`` are ignored.
"""
from __future__ import annotations

import hashlib
import os
import threading
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Any

from ..algebra import FGAbelianGroup, Homomorphism, IntMatrix, bernoulli
from ..env.config import TABLE_ENV
from ..env.messages import DEBUG
from ..util.error import (
    MissingCompositionData, OutOfTable, TableFormatError, shorten_list
)


HEADER = "SPHERETABLE"
VERSION = "v1"
HOPF_ONE = frozenset({1, 3, 7})


#######################
####    ENTRIES    ####
#######################


@dataclass(frozen=True)
class SphereGroupEntry:
    """``pi_k(S^n)`` together with opaque names for its canonical generators."""

    n: int
    k: int
    group: FGAbelianGroup
    generator_labels: tuple[str, ...]

    def __post_init__(self) -> None:
        if self.n < 1 or self.k < 0:
            raise ValueError(f"invalid sphere degrees (n={self.n}, k={self.k})")
        if self.k < self.n and not self.group.is_trivial:
            raise ValueError(
                f"pi_{self.k}(S^{self.n}) must be trivial, not {self.group}"
            )
        if self.k == self.n and self.group != FGAbelianGroup.integers():
            raise ValueError(f"pi_{self.n}(S^{self.n}) must be Z, not {self.group}")
        if len(self.generator_labels) != self.group.generator_count:
            raise ValueError(
                f"pi_{self.k}(S^{self.n}) = {self.group} needs "
                f"{self.group.generator_count} labels, got "
                f"{shorten_list(self.generator_labels)}"
            )


@dataclass(frozen=True)
class WhiteheadSquareEntry:
    """The order of ``[i_n, i_n]`` in ``pi_{2n-1}(S^n)``; ``order=None`` is infinite."""

    n: int
    order: int | None
    suspension_kernel_note: str = ""

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"sphere dimension must be positive, not {self.n}")
        if self.order is None:
            if self.n % 2:
                raise ValueError(
                    f"[i_{self.n}, i_{self.n}] has finite order (n is odd)"
                )
            return
        if self.order < 1:
            raise ValueError(f"order must be positive or infinite, not {self.order}")
        if self.n % 2 == 0:
            raise ValueError(f"[i_{self.n}, i_{self.n}] has infinite order (n is even)")
        if (self.order == 1) != (self.n in HOPF_ONE):
            raise ValueError(
                f"[i_{self.n}, i_{self.n}] vanishes exactly when n is 1, 3 or 7 "
                f"(got order {self.order})"
            )

    @property
    def is_infinite(self) -> bool:
        """Whether the square has infinite order."""
        return self.order is None


@dataclass(frozen=True)
class CompositionTableEntry:
    """The matrix of ``alpha -> [i, i] o Sigma alpha`` from ``pi_k(S^{n-1})``
    to ``pi_{n+k-2}(S^{n-1})``, one row per source generator.
    """

    n: int
    k: int
    matrix: IntMatrix


#####################
####    TABLE    ####
#####################


class SphereTable:
    """An immutable, validated set of table entries.

    Use :meth:`load` or :meth:`parse` to build one.  Lookups never mutate the
    table, so a loaded table can be shared between threads.
    """

    def __init__(
        self,
        groups: dict[tuple[int, int], SphereGroupEntry],
        whitehead: dict[int, WhiteheadSquareEntry],
        image_j: dict[int, int],
        compositions: dict[tuple[int, int], CompositionTableEntry],
        theta: dict[int, tuple[int, FGAbelianGroup | None]],
        kernel_phi: dict[int, int],
        source: str = "<memory>",
    ) -> None:
        self._groups = groups
        self._whitehead = whitehead
        self._image_j = image_j
        self._compositions = compositions
        self._theta = theta
        self._kernel_phi = kernel_phi
        self.source = source
        stems = [k - n for n, k in groups if n == k - n + 2]
        self.max_stable_stem = max(stems, default=0)
        self._validate()

    #######################
    ####    LOADING    ####
    #######################

    @classmethod
    def load(cls, path: Path | str) -> SphereTable:
        """Read and validate a table file.

        Parameters
        ----------
        path : Path | str
            The table file.

        Returns
        -------
        SphereTable
            The validated table.

        Raises
        ------
        TableFormatError
            If the header, checksum or any entry is invalid.
        """
        path = Path(path)
        DEBUG(f"loading sphere table from {path}")
        return cls.parse(path.read_bytes(), source=str(path))

    @classmethod
    def parse(cls, data: bytes, source: str = "<memory>") -> SphereTable:
        """Validate raw table bytes.  See :meth:`load`."""
        header, sep, body = data.partition(b"\n")
        fields = header.decode("utf-8").split()
        if len(fields) != 3 or fields[0] != HEADER:
            raise TableFormatError(f"{source}: missing '{HEADER}' header")
        if fields[1] != VERSION:
            raise TableFormatError(f"{source}: unsupported table version {fields[1]}")
        if not sep or hashlib.sha256(body).hexdigest() != fields[2].lower():
            raise TableFormatError(f"{source}: checksum mismatch")

        groups: dict[tuple[int, int], SphereGroupEntry] = {}
        whitehead: dict[int, WhiteheadSquareEntry] = {}
        image_j: dict[int, int] = {}
        raw_compositions: dict[tuple[int, int], list[list[int]]] = {}
        theta: dict[int, tuple[int, FGAbelianGroup | None]] = {}
        kernel_phi: dict[int, int] = {}

        def claim(table: dict[Any, Any], key: object, lineno: int) -> None:
            if key in table:
                raise TableFormatError(f"{source}:{lineno}: duplicate entry {key}")

        for lineno, raw in enumerate(body.decode("utf-8").splitlines(), start=2):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            kind, _, rest = line.partition(" ")
            try:
                if kind == "PI":
                    entry = _parse_group(rest)
                    claim(groups, (entry.n, entry.k), lineno)
                    groups[entry.n, entry.k] = entry
                elif kind == "WSQ":
                    square = _parse_whitehead(rest)
                    claim(whitehead, square.n, lineno)
                    whitehead[square.n] = square
                elif kind == "IMJ":
                    k, order = _ints(rest, 2)
                    if k < 0 or order < 1:
                        raise ValueError(f"invalid image of J entry {rest}")
                    claim(image_j, k, lineno)
                    image_j[k] = order
                elif kind == "CMP":
                    n_text, k_text, rows = rest.split(maxsplit=2)
                    key = (int(n_text), int(k_text))
                    claim(raw_compositions, key, lineno)
                    raw_compositions[key] = [
                        [int(x) for x in row.split(",")] for row in rows.split(";")
                    ]
                elif kind == "THETA":
                    k, order, group = _parse_theta(rest)
                    claim(theta, k, lineno)
                    theta[k] = (order, group)
                elif kind == "KERPHI":
                    k, order = _ints(rest, 2)
                    if order < 1:
                        raise ValueError(f"invalid kernel order {order}")
                    claim(kernel_phi, k, lineno)
                    kernel_phi[k] = order
                else:
                    raise TableFormatError(
                        f"{source}:{lineno}: unknown line type {kind}"
                    )
            except TableFormatError:
                raise
            except ValueError as err:
                raise TableFormatError(f"{source}:{lineno}: {err}") from err

        table = cls(groups, whitehead, image_j, {}, theta, kernel_phi, source)
        compositions: dict[tuple[int, int], CompositionTableEntry] = {}
        for (n, k), rows in raw_compositions.items():
            try:
                domain = table.entry(n - 1, k).group
                codomain = table.entry(n - 1, n + k - 2).group
                matrix = IntMatrix.from_rows(rows, cols=len(rows[0]))
                Homomorphism(domain, codomain, matrix)
            except (OutOfTable, ValueError) as err:
                raise TableFormatError(
                    f"{source}: bad composition entry CMP {n} {k}: {err}"
                ) from err
            compositions[n, k] = CompositionTableEntry(n, k, matrix)
        table._compositions = compositions
        DEBUG(
            f"sphere table: {len(groups)} groups, {len(compositions)} composition "
            f"maps, stable stems through {table.max_stable_stem}"
        )
        return table

    def _validate(self) -> None:
        for k, order in self._image_j.items():
            expected = _image_j_formula(k)
            if expected is not None and order != expected:
                raise TableFormatError(
                    f"{self.source}: image of J in stem {k} has order {expected}, "
                    f"not {order}"
                )
            if k > self.max_stable_stem:
                continue
            stem = self.stable_stem(k)
            if stem.order is not None and stem.order % order:
                raise TableFormatError(
                    f"{self.source}: image of J order {order} does not divide "
                    f"|pi_{k}^s| = {stem.order}"
                )
        for k, (order, group) in self._theta.items():
            if group is not None and group.order != order:
                raise TableFormatError(
                    f"{self.source}: Theta_{k} = {group} does not have order {order}"
                )

    ######################
    ####    LOOKUP    ####
    ######################

    def entry(self, n: int, k: int) -> SphereGroupEntry:
        """``pi_k(S^n)`` with its generator labels.

        Parameters
        ----------
        n : int
            Sphere dimension, at least 1.
        k : int
            Homotopy degree, at least 0.

        Returns
        -------
        SphereGroupEntry
            The table entry (or the entry implied by connectivity, degree,
            the universal cover of the circle, or suspension).

        Raises
        ------
        ValueError
            If `n` < 1 or `k` < 0.
        OutOfTable
            If the group lies outside the bundled window.
        """
        if n < 1 or k < 0:
            raise ValueError(f"invalid sphere degrees (n={n}, k={k})")
        if k < n or (n == 1 and k > 1):
            return SphereGroupEntry(n, k, FGAbelianGroup.trivial(), ())
        if k == n:
            return SphereGroupEntry(n, k, FGAbelianGroup.integers(), (f"iota{n}",))
        stem = k - n
        if n >= stem + 2:
            stable = self._groups.get((stem + 2, 2 * stem + 2))
            if stable is None:
                raise OutOfTable(f"stable stem {stem} is not tabulated")
            return SphereGroupEntry(n, k, stable.group, stable.generator_labels)
        entry = self._groups.get((n, k))
        if entry is None:
            raise OutOfTable(f"pi_{k}(S^{n}) is outside the bundled table")
        return entry

    def pi_sphere(self, n: int, k: int) -> FGAbelianGroup:
        """The isomorphism type of ``pi_k(S^n)``.  See :meth:`entry`."""
        return self.entry(n, k).group

    def stable_stem(self, k: int) -> FGAbelianGroup:
        """The stable stem ``pi_k^s`` for ``0 <= k <= max_stable_stem``.

        Raises
        ------
        OutOfTable
            If `k` is negative or beyond the tabulated stems.
        """
        if k < 0 or k > self.max_stable_stem:
            raise OutOfTable(f"stable stem {k} is outside 0..{self.max_stable_stem}")
        return self.pi_sphere(k + 2, 2 * k + 2)

    def whitehead_square(self, n: int) -> WhiteheadSquareEntry:
        """The Whitehead square entry for ``S^n``.

        Raises
        ------
        OutOfTable
            If `n` is not tabulated.
        """
        try:
            return self._whitehead[n]
        except KeyError as err:
            raise OutOfTable(f"Whitehead square of i_{n} is not tabulated") from err

    def im_j_order(self, k: int) -> int:
        """The order of the image of J in ``pi_k^s``.

        ``denominator(B_r / 4r)`` in stem ``4r - 1``, 2 in stems ``0, 1 mod 8``
        and 1 elsewhere.  The bundled rows must agree.

        Raises
        ------
        OutOfTable
            If `k` is not tabulated.
        """
        if k not in self._image_j:
            raise OutOfTable(f"image of J in stem {k} is not tabulated")
        order = _image_j_formula(k)
        return self._image_j[k] if order is None else order

    def composition(self, n: int, k: int) -> CompositionTableEntry:
        """The composition entry realizing ``phi_k`` for ``G_n``.

        Raises
        ------
        MissingCompositionData
            If no entry is bundled.
        """
        try:
            return self._compositions[n, k]
        except KeyError as err:
            raise MissingCompositionData(
                f"no composition data for phi_{k} on pi_{k}(S^{n - 1})"
            ) from err

    def theta(self, k: int) -> tuple[int, FGAbelianGroup | None]:
        """The published order of ``Theta_k`` and its group when known.

        Raises
        ------
        OutOfTable
            If `k` is not tabulated.
        """
        try:
            return self._theta[k]
        except KeyError as err:
            raise OutOfTable(f"Theta_{k} is not tabulated") from err

    def kernel_phi(self, k: int) -> int:
        """The order of the kernel of ``coker J -> P_k``.

        Raises
        ------
        OutOfTable
            If `k` is not tabulated.
        """
        try:
            return self._kernel_phi[k]
        except KeyError as err:
            raise OutOfTable(f"ker(coker J -> P_{k}) is not tabulated") from err


#######################
####    PRIVATE    ####
#######################


def _image_j_formula(k: int) -> int | None:
    # denominator(B_r / 4r) for k = 4r - 1; None for k <= 0
    if k <= 0:
        return None
    if k % 4 == 3:
        r = (k + 1) // 4
        return (bernoulli(r) / (4 * r)).denominator
    return 2 if k % 8 in (0, 1) else 1


def _ints(text: str, count: int) -> list[int]:
    fields = text.split()
    if len(fields) != count:
        raise ValueError(f"expected {count} integers, got {repr(text)}")
    return [int(x) for x in fields]


def _torsion(text: str) -> list[int]:
    return [] if text in ("", "-") else [int(x) for x in text.split(",")]


def _parse_group(text: str) -> SphereGroupEntry:
    n_text, k_text, rank_text, rest = text.split(maxsplit=3)
    torsion_text, _, label_text = rest.partition("#")
    labels = tuple(x for x in label_text.strip().split(",") if x)
    group = FGAbelianGroup(int(rank_text), tuple(_torsion(torsion_text.strip())))
    return SphereGroupEntry(int(n_text), int(k_text), group, labels)


def _parse_whitehead(text: str) -> WhiteheadSquareEntry:
    fields = text.split(maxsplit=2)
    if len(fields) < 2:
        raise ValueError(f"expected 'WSQ n order [note]', got {repr(text)}")
    order = None if fields[1] == "inf" else int(fields[1])
    note = fields[2] if len(fields) > 2 else ""
    return WhiteheadSquareEntry(int(fields[0]), order, note)


def _parse_theta(text: str) -> tuple[int, int, FGAbelianGroup | None]:
    fields = text.split()
    if len(fields) not in (2, 3):
        raise ValueError(f"expected 'THETA k order [torsion]', got {repr(text)}")
    k, order = int(fields[0]), int(fields[1])
    if k < 1 or order < 1:
        raise ValueError(f"invalid Theta entry {repr(text)}")
    group = None
    if len(fields) == 3:
        group = FGAbelianGroup(0, tuple(_torsion(fields[2])))
    return k, order, group


######################
####    PUBLIC    ####
######################


_lock = threading.Lock()
_override: Path | None = None


def bundled_table_path() -> Path:
    """The data file shipped with the package."""
    return Path(str(resources.files("immgate.tables") / "data" / "spheres.tbl"))


def use_table(path: Path | str | None) -> None:
    """Select the table file that :func:`default_table` loads.

    Parameters
    ----------
    path : Path | str | None
        A table file, or None to fall back to ``$IMMGATE_TABLE_PATH`` and then
        the bundled file.
    """
    global _override  # pylint: disable=global-statement
    with _lock:
        _override = Path(path) if path is not None else None
        _load.cache_clear()


@lru_cache(maxsize=1)
def _load(path: Path) -> SphereTable:
    return SphereTable.load(path)


def default_table() -> SphereTable:
    """The shared table, loaded once on first use.

    Returns
    -------
    SphereTable
        The table named by :func:`use_table`, ``$IMMGATE_TABLE_PATH`` or the
        bundled data file, in that order.
    """
    with _lock:
        path = _override
        if path is None:
            env = os.environ.get(TABLE_ENV)
            path = Path(env) if env else bundled_table_path()
        return _load(path)


def pi_sphere(n: int, k: int) -> FGAbelianGroup:
    """``pi_k(S^n)`` from the default table.  See :meth:`SphereTable.entry`."""
    return default_table().pi_sphere(n, k)


def stable_stem(k: int) -> FGAbelianGroup:
    """``pi_k^s`` from the default table.  See :meth:`SphereTable.stable_stem`."""
    return default_table().stable_stem(k)


def whitehead_square(n: int) -> WhiteheadSquareEntry:
    """``[i_n, i_n]`` from the default table."""
    return default_table().whitehead_square(n)


def im_j_order(k: int) -> int:
    """The image of J in stem `k` from the default table."""
    return default_table().im_j_order(k)
