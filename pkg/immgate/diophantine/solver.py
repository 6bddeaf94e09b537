"""Bounded search and modular filters for quadratic systems.

The search is exhaustive over the box ``0 <= x_1 <= bound`` and
``|x_i| <= bound`` for ``i > 1``.  The homogeneous forms are invariant under
``x -> -x``, so fixing the sign of ``x_1`` loses nothing.  Variables are scanned
lexicographically, each free variable in the order ``0, 1, -1, 2, -2, ...``,
which makes the returned assignment a deterministic function of the input.

The box is cut into chunks by fixing leading variables.  Within a chunk the
remaining prefix is laid out as a numpy grid and the last variable is solved
for by evaluating ``q x^2 + c x + d - b`` for every candidate at once.  Chunks
may be evaluated on a thread pool, but results are always combined in chunk
order, so the answer and the budget accounting do not depend on `workers`.
"""
from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, Iterator

import numpy as np

from ..env.messages import DEBUG, INFO
from ..util.error import BudgetExceeded
from .system import (
    Inconclusive,
    NoSolutionWithinBound,
    QuadSystem,
    Solution,
    SolveOutcome,
    UnsatisfiableProof,
    validate,
)


DEFAULT_BUDGET = 10**8
DEFAULT_MODULUS_CAP = 64
CHUNK_CELLS = 1 << 20
INT64_LIMIT = 1 << 62


#######################
####    PRIVATE    ####
#######################


def _zigzag(bound: int) -> np.ndarray:
    """``[0, 1, -1, 2, -2, ..., bound, -bound]``."""
    values = np.zeros(2 * bound + 1, dtype=np.int64)
    values[1::2] = np.arange(1, bound + 1)
    values[2::2] = -np.arange(1, bound + 1)
    return values


def _coefficient_tensor(system: QuadSystem) -> list[dict[tuple[int, int], int]]:
    """Per equation, ``{(i, j): a}`` with 0-based indices."""
    return [
        {(i - 1, j - 1): a for i, j, a in eq.coeffs} for eq in system.equations
    ]


def _dtype(system: QuadSystem, bound: int) -> Any:
    """int64 when no intermediate can overflow, else Python integers."""
    worst = max(
        (
            sum(abs(a) for _, _, a in eq.coeffs) * bound * bound + abs(eq.target)
            for eq in system.equations
        ),
        default=0,
    )
    return np.int64 if worst < INT64_LIMIT else object


@dataclass(frozen=True)
class _Chunk:
    """A slab of the box with the first ``len(fixed)`` variables pinned."""

    fixed: tuple[int, ...]
    rows: int
    width: int

    @property
    def nodes(self) -> int:
        """Assignments examined by this chunk."""
        return self.rows * self.width


class _BoxSearch:
    """Vectorized evaluation of one system over one box."""

    def __init__(self, system: QuadSystem, bound: int) -> None:
        self.system = system
        self.bound = bound
        self.r = system.r
        self.zigzag = _zigzag(bound)
        self.width = len(self.zigzag)
        self.dtype = _dtype(system, bound)
        self.tensor = _coefficient_tensor(system)
        self.targets = [eq.target for eq in system.equations]

        # variables 0 .. depth-1 are fixed per chunk; depth .. r-2 form the grid
        depth = 1
        while depth < self.r - 1 and self.width ** (self.r - depth) > CHUNK_CELLS:
            depth += 1
        self.depth = depth
        self.grid_vars = self.r - 1 - depth
        self.grid: list[np.ndarray] = []
        if self.grid_vars:
            mesh = np.meshgrid(*([self.zigzag] * self.grid_vars), indexing="ij")
            self.grid = [m.reshape(-1).astype(self.dtype) for m in mesh]

    @property
    def total_nodes(self) -> int:
        """Assignments in the whole box."""
        return (self.bound + 1) * self.width ** (self.r - 1)

    def first_values(self) -> np.ndarray:
        """Candidates for ``x_1``: ``0 .. bound``."""
        return np.arange(self.bound + 1, dtype=np.int64)

    def chunks(self) -> Iterator[_Chunk]:
        """Chunks in lexicographic order of their fixed prefix."""
        rows = self.width ** self.grid_vars
        heads = [int(v) for v in self.first_values()]
        tails = [int(v) for v in self.zigzag]
        for fixed in itertools.product(heads, *([tails] * (self.depth - 1))):
            yield _Chunk(tuple(fixed), rows, self.width)

    def evaluate(self, chunk: _Chunk) -> tuple[int, ...] | None:
        """The first assignment in the chunk satisfying every equation."""
        # columns[t] holds variable t for every row of the chunk
        columns = [np.full(chunk.rows, v, dtype=self.dtype) for v in chunk.fixed]
        columns.extend(self.grid)
        last = self.r - 1
        z = self.zigzag.astype(self.dtype)

        ok = np.ones((chunk.rows, chunk.width), dtype=bool)
        for coeffs, target in zip(self.tensor, self.targets):
            q = 0
            c = np.zeros(chunk.rows, dtype=self.dtype)
            d = np.zeros(chunk.rows, dtype=self.dtype)
            for (i, j), a in coeffs.items():
                if j < last:
                    d = d + a * columns[i] * columns[j]
                elif i < last:
                    c = c + a * columns[i]
                else:
                    q = a
            residual = q * z * z + np.multiply.outer(c, z) + (d - target)[:, None]
            ok &= residual == 0
            if not ok.any():
                return None

        flat = int(np.argmax(ok))
        if not ok.flat[flat]:
            return None
        row, col = divmod(flat, chunk.width)
        prefix = tuple(int(column[row]) for column in columns)
        return prefix + (int(self.zigzag[col]),)


def _solve_single(system: QuadSystem, bound: int, budget: int) -> SolveOutcome:
    """``r == 1``: scan ``x_1 = 0 .. bound`` directly."""
    if bound + 1 > budget:
        raise BudgetExceeded(f"search needs {bound + 1} nodes, budget is {budget}")
    x = np.arange(bound + 1, dtype=_dtype(system, bound))
    ok = np.ones(bound + 1, dtype=bool)
    for eq in system.equations:
        q = sum(a for _, _, a in eq.coeffs)
        ok &= q * x * x == eq.target
    hits = np.flatnonzero(ok)
    if len(hits):
        return Solution(system, (int(hits[0]),))
    return NoSolutionWithinBound(bound)


######################
####    PUBLIC    ####
######################


def solve_within_bound(
    system: QuadSystem,
    bound: int,
    budget: int | None = None,
    workers: int | None = None,
) -> SolveOutcome:
    """Search the box ``|x_i| <= bound`` for a solution.

    Parameters
    ----------
    system : QuadSystem
        The system.  It is validated first.
    bound : int
        Non-negative bound on every variable.
    budget : int | None, default None
        Maximum number of assignments to examine.  Defaults to
        :data:`DEFAULT_BUDGET`.
    workers : int | None, default None
        Threads evaluating chunks.  Has no effect on the result.

    Returns
    -------
    Solution | NoSolutionWithinBound
        The first solution in search order, or a certificate that the box is
        empty.

    Raises
    ------
    ValueError
        If `bound` is negative.
    MalformedIndices
        If the system does not validate.
    BudgetExceeded
        If the search would examine more than `budget` assignments before
        finishing.  Nothing is returned in that case, even if part of the box
        was clean.
    """
    if bound < 0:
        raise ValueError(f"bound must be non-negative, not {bound}")
    budget = DEFAULT_BUDGET if budget is None else budget
    workers = max(1, workers or 1)
    system = validate(system)

    if system.r == 0:
        if all(eq.target == 0 for eq in system.equations):
            return Solution(system, ())
        return NoSolutionWithinBound(bound)
    if system.r == 1:
        return _solve_single(system, bound, budget)

    search = _BoxSearch(system, bound)
    total = search.total_nodes
    INFO(
        f"searching {total} assignments (r={system.r}, s={system.s}, "
        f"bound={bound})"
    )

    nodes = 0
    chunks = search.chunks()
    with ThreadPoolExecutor(max_workers=workers) as pool:
        while batch := list(itertools.islice(chunks, workers)):
            allowed = []
            for chunk in batch:
                if nodes + chunk.nodes > budget:
                    break
                allowed.append(chunk)
                nodes += chunk.nodes
            for result in pool.map(search.evaluate, allowed):
                if result is not None:
                    DEBUG(f"solution {result} after at most {nodes} nodes")
                    return Solution(system, result)
            if len(allowed) < len(batch):
                raise BudgetExceeded(
                    f"search needs {total} nodes, budget of {budget} exhausted "
                    f"after {nodes}"
                )
    return NoSolutionWithinBound(bound)


def modular_obstruction(
    system: QuadSystem,
    modulus: int,
    budget: int | None = None,
    cap: int = DEFAULT_MODULUS_CAP,
) -> UnsatisfiableProof | Inconclusive:
    """Look for a solution of the system modulo `modulus`.

    Parameters
    ----------
    system : QuadSystem
        The system.  It is validated first.
    modulus : int
        The modulus, ``2 <= modulus <= cap``.
    budget : int | None, default None
        Maximum number of residue vectors to examine.
    cap : int, default 64
        Largest modulus accepted.

    Returns
    -------
    UnsatisfiableProof | Inconclusive
        A proof when no residue vector satisfies every equation.

    Raises
    ------
    ValueError
        If `modulus` is outside ``2 .. cap``.
    BudgetExceeded
        If ``modulus ** r`` exceeds the budget.
    """
    if not 2 <= modulus <= cap:
        raise ValueError(f"modulus must lie in 2..{cap}, not {modulus}")
    budget = DEFAULT_BUDGET if budget is None else budget
    system = validate(system)
    r = system.r
    targets = [eq.target % modulus for eq in system.equations]
    if r == 0:
        if any(targets):
            return UnsatisfiableProof(modulus=modulus)
        return Inconclusive(modulus)

    total = modulus**r
    if total > budget:
        raise BudgetExceeded(
            f"modulus {modulus} needs {total} residue vectors, budget is {budget}"
        )
    tensor = [
        [(i - 1, j - 1, a % modulus) for i, j, a in eq.coeffs]
        for eq in system.equations
    ]
    shape = (modulus,) * r
    for start in range(0, total, CHUNK_CELLS):
        index = np.arange(start, min(start + CHUNK_CELLS, total), dtype=np.int64)
        digits = np.unravel_index(index, shape)
        ok = np.ones(len(index), dtype=bool)
        for coeffs, target in zip(tensor, targets):
            acc = np.zeros(len(index), dtype=np.int64)
            for i, j, a in coeffs:
                acc = (acc + a * digits[i] * digits[j]) % modulus
            ok &= acc == target
            if not ok.any():
                break
        if ok.any():
            return Inconclusive(modulus)
    return UnsatisfiableProof(modulus=modulus)


def decide(
    system: QuadSystem,
    bound: int,
    mod_filter: int | None = None,
    budget: int | None = None,
    workers: int | None = None,
    modulus_cap: int = DEFAULT_MODULUS_CAP,
) -> SolveOutcome:
    """Cheap refutations first, then the bounded search.

    An equation with no terms and a nonzero target is refuted outright.  If
    `mod_filter` is given, every modulus ``2 .. mod_filter`` within the budget
    is tried next.  Otherwise the result is that of :func:`solve_within_bound`.

    Parameters
    ----------
    system : QuadSystem
        The system.
    bound : int
        Bound for the search.
    mod_filter : int | None, default None
        Largest modulus to try.
    budget : int | None, default None
        Node budget shared by each stage separately.
    workers : int | None, default None
        Threads for the bounded search.
    modulus_cap : int, default 64
        Largest modulus accepted.

    Returns
    -------
    Solution | NoSolutionWithinBound | UnsatisfiableProof
        The first conclusive outcome.

    Raises
    ------
    ValueError
        If `mod_filter` exceeds `modulus_cap`, or `bound` is negative.
    BudgetExceeded
        If the bounded search exceeds the budget.
    """
    system = validate(system)
    for k, eq in enumerate(system.equations, start=1):
        if not eq.coeffs and eq.target:
            return UnsatisfiableProof(witness="zero-form", equation=k)

    if mod_filter is not None:
        if mod_filter > modulus_cap:
            raise ValueError(
                f"modulus filter {mod_filter} exceeds the cap {modulus_cap}"
            )
        budget_ = DEFAULT_BUDGET if budget is None else budget
        for m in range(2, mod_filter + 1):
            if m**system.r > budget_:
                DEBUG(f"skipping modulus {m}: {m}^{system.r} exceeds budget")
                break
            outcome = modular_obstruction(system, m, budget_, modulus_cap)
            if isinstance(outcome, UnsatisfiableProof):
                INFO(f"no solutions modulo {m}")
                return outcome

    return solve_within_bound(system, bound, budget, workers)
