"""Orders of groups of homotopy spheres and the surgery obstructions behind them."""
from .theta import (
    KERVAIRE_DIMENSIONS,
    ThetaAssembly,
    bp_divisor_expression,
    bp_order,
    coker_j,
    kervaire_dimension,
    p_group,
    surgery_invariant,
    theta_assembly,
)
