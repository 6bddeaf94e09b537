"""Quadratic systems as lifting problems over wedges of spheres, and back."""
from .h10 import (
    Cell,
    LiftingInstance,
    ThickeningMetadata,
    class_data_from_lifting,
    compile_to_lifting,
    extract_quadratic,
    lifting_solvable,
    thickening_metadata,
)
