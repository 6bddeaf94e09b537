"""Characteristic-class data and the rational obstruction tests."""
from .classes import ManifoldClassData, MiddleForms
from .rational import (
    ObstructionReport,
    Verdict,
    closed_embedding_obstruction,
    euler_square_problem,
    pontryagin_obstruction,
)
