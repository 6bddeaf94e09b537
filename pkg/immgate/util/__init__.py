"""Error types, type hints and serialization helpers shared across the package."""
from .error import shorten_list
from .schema import check_schema, dumps, loads, load, tag
