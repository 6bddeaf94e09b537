"""This module provides PEP 484-style type hints for ``immgate`` constructs.
"""
from __future__ import annotations

from typing import Any, Mapping, Sequence, Union


#########################
####    ITERABLES    ####
#########################


int_rows = Sequence[Sequence[int]]


###################
####    I/O    ####
###################


json_scalar = Union[str, int, float, bool, None]


json_object = Mapping[str, Any]
