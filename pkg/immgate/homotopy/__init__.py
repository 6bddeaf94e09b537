"""Homotopy groups of the monoids ``G_n`` of self equivalences of spheres."""
from .gn import (
    CaseTag,
    GnGroupResult,
    State,
    bg_infinite_dim,
    bg_stabilization_connectivity,
    phi_map,
    pi_gn,
)
