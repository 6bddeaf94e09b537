"""Bundled homotopy groups of spheres and related reference data."""
from .spheres import (
    CompositionTableEntry,
    SphereGroupEntry,
    SphereTable,
    WhiteheadSquareEntry,
    bundled_table_path,
    default_table,
    im_j_order,
    pi_sphere,
    stable_stem,
    use_table,
    whitehead_square,
)
