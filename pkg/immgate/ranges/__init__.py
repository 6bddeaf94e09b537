"""Decidability of immersion and embedding by dimension range."""
from .classify import (
    Category,
    Kind,
    ProblemSpec,
    RangeVerdict,
    Stabilization,
    Status,
    classify_embedding,
    classify_immersion,
    embedding_range,
    embedding_stabilization,
    immersion_range,
)
from .sweep import chart, sweep
