"""Decidability of immersing and embedding manifolds in Euclidean space.

Subpackages
-----------
algebra
    Exact arithmetic: Bernoulli numbers, integer matrices and the Smith normal
    form, finitely generated abelian groups, signatures and Arf invariants.

tables
    Bundled homotopy groups of spheres, Whitehead squares, image of J and
    groups of homotopy spheres, loaded from a checksummed data file.

homotopy
    Homotopy groups of ``G_n`` and of its classifying space.

diophantine
    Quadratic Diophantine systems with a bounded search and modular filters.

bridge
    Quadratic systems as lifting problems over wedges of spheres.

obstruction
    Characteristic-class data and the rational Pontryagin and Euler-square
    tests.

ranges
    The decidability verdict for every dimension pair and category.

exotic
    Orders of groups of homotopy spheres and surgery obstructions.
"""
from .env import Settings, load_settings
from .env.version import __version__
from .diophantine import (
    QuadSystem,
    decide,
    modular_obstruction,
    solve_within_bound,
    validate,
)
from .bridge import LiftingInstance, compile_to_lifting, extract_quadratic
from .obstruction import ManifoldClassData
from .ranges import (
    ProblemSpec,
    classify_embedding,
    classify_immersion,
    embedding_stabilization,
)
from .util.error import ImmgateError
