"""Read and write the versioned JSON documents exchanged on the command line.

Payloads are written with sorted keys and a fixed indentation so that two runs
over the same input produce byte-identical output.  Every document carries a
``"schema": "<name>/<version>"`` field.  Inputs may omit it, but when present
the name must match and the version must share our major version.
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from packaging.version import InvalidVersion, Version

from .error import SchemaError
from .type_hints import json_object


SCHEMA_VERSION = Version("1")


def tag(name: str) -> str:
    """Get the schema tag for a document type.

    Parameters
    ----------
    name : str
        The document type, e.g. ``"quad-system"``.

    Returns
    -------
    str
        The tag written into the ``schema`` field.
    """
    return f"{name}/{SCHEMA_VERSION.major}"


def check_schema(doc: json_object, name: str) -> None:
    """Reject a document whose ``schema`` field names another type or version.

    Parameters
    ----------
    doc : Mapping[str, Any]
        A decoded JSON object.
    name : str
        The document type that the caller expects.

    Raises
    ------
    SchemaError
        If the document is not an object, or declares a different name or an
        incompatible version.
    """
    if not isinstance(doc, dict):
        raise SchemaError(f"expected a JSON object, not {type(doc).__name__}")
    declared = doc.get("schema")
    if declared is None:
        return
    if not isinstance(declared, str) or "/" not in declared:
        raise SchemaError(f"malformed schema tag: {repr(declared)}")
    declared_name, _, declared_version = declared.partition("/")
    if declared_name != name:
        raise SchemaError(f"expected a '{name}' document, not '{declared_name}'")
    try:
        version = Version(declared_version)
    except InvalidVersion as err:
        raise SchemaError(
            f"malformed schema version: {repr(declared_version)}"
        ) from err
    if version.major != SCHEMA_VERSION.major:
        raise SchemaError(
            f"unsupported '{name}' schema version {version} (expected "
            f"{SCHEMA_VERSION.major}.x)"
        )


def dumps(name: str, payload: dict[str, Any]) -> str:
    """Serialize a payload with its schema tag.

    Parameters
    ----------
    name : str
        The document type.
    payload : dict[str, Any]
        JSON-compatible content.  A ``schema`` key is added.

    Returns
    -------
    str
        The canonical text, terminated by a newline.
    """
    doc = dict(payload)
    doc["schema"] = tag(name)
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def loads(text: str, name: str) -> dict[str, Any]:
    """Parse a document and check its schema tag.

    Parameters
    ----------
    text : str
        The raw JSON text.
    name : str
        The document type that the caller expects.

    Returns
    -------
    dict[str, Any]
        The decoded object.

    Raises
    ------
    SchemaError
        If the text is not valid JSON or its schema tag is incompatible.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as err:
        raise SchemaError(f"invalid JSON: {err}") from err
    check_schema(doc, name)
    return doc


def load(path: Path | str, name: str) -> dict[str, Any]:
    """Read a document from disk.  See :func:`loads`."""
    return loads(Path(path).read_text(encoding="utf-8"), name)
