"""Load runtime settings from an ``immgate.toml`` file and the environment.

Settings resolve in order: built-in defaults, the ``[immgate]`` table of a TOML
file (``$IMMGATE_CONFIG`` or ``./immgate.toml``), the ``IMMGATE_TABLE_PATH``
environment variable, and finally explicit overrides from the command line.
"""
from __future__ import annotations

import dataclasses
import os
from pathlib import Path
from typing import Any

import tomlkit

from ..util.error import SchemaError
from .messages import DEBUG


CONFIG_ENV = "IMMGATE_CONFIG"
TABLE_ENV = "IMMGATE_TABLE_PATH"
CONFIG_NAME = "immgate.toml"


@dataclasses.dataclass(frozen=True)
class Settings:
    """Effective runtime configuration.

    Attributes
    ----------
    budget : int
        Node budget for the bounded search and the modular filter.
    modulus_cap : int
        Largest modulus accepted by the modular filter.
    workers : int
        Number of threads the bounded search may use.
    table_path : Path | None
        Sphere table to load instead of the bundled one.
    verbosity : int
        Console message threshold (see :mod:`immgate.env.messages`).
    """

    budget: int = 10**8
    modulus_cap: int = 64
    workers: int = 1
    table_path: Path | None = None
    verbosity: int = 1

    def __post_init__(self) -> None:
        for name in ("budget", "modulus_cap", "workers"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                raise SchemaError(
                    f"'{name}' must be a positive integer, not {repr(value)}"
                )
        if not isinstance(self.verbosity, int) or self.verbosity < 0:
            raise SchemaError(
                f"'verbosity' must be a non-negative integer, not "
                f"{repr(self.verbosity)}"
            )

    def replace(self, **overrides: Any) -> Settings:
        """Return a copy with the non-None overrides applied.

        Parameters
        ----------
        **overrides : Any
            Field values.  ``None`` leaves a field unchanged.

        Returns
        -------
        Settings
            The updated settings.
        """
        return dataclasses.replace(
            self, **{k: v for k, v in overrides.items() if v is not None}
        )

    def to_toml(self) -> str:
        """Render the settings as an ``immgate.toml`` document.

        Returns
        -------
        str
            TOML text with a single ``[immgate]`` table.
        """
        doc = tomlkit.document()
        table = tomlkit.table()
        table.add("budget", self.budget)
        table.add("modulus_cap", self.modulus_cap)
        table.add("workers", self.workers)
        if self.table_path is not None:
            table.add("table_path", str(self.table_path))
        table.add("verbosity", self.verbosity)
        doc.add("immgate", table)
        return tomlkit.dumps(doc)


def _config_file(path: Path | None) -> Path | None:
    if path is not None:
        return path
    env = os.environ.get(CONFIG_ENV)
    if env:
        return Path(env)
    local = Path.cwd() / CONFIG_NAME
    return local if local.exists() else None


def load_settings(path: Path | str | None = None) -> Settings:
    """Resolve settings from a config file and the environment.

    Parameters
    ----------
    path : Path | str | None, default None
        An explicit config file.  If omitted, ``$IMMGATE_CONFIG`` and then
        ``./immgate.toml`` are tried.

    Returns
    -------
    Settings
        The resolved settings.

    Raises
    ------
    FileNotFoundError
        If an explicitly named config file does not exist.
    SchemaError
        If the file has unknown keys or values of the wrong type.
    """
    values: dict[str, Any] = {}
    config = _config_file(Path(path) if path is not None else None)
    if config is not None:
        DEBUG(f"reading settings from {config}")
        with config.open("r", encoding="utf-8") as f:
            content = tomlkit.load(f).unwrap()
        table = content.get("immgate", {})
        if not isinstance(table, dict):
            raise SchemaError(f"[immgate] in {config} must be a table")
        known = {field.name for field in dataclasses.fields(Settings)}
        unknown = sorted(set(table) - known)
        if unknown:
            raise SchemaError(f"unknown keys in {config}: {unknown}")
        values.update(table)
        if "table_path" in values:
            values["table_path"] = Path(values["table_path"])

    table_env = os.environ.get(TABLE_ENV)
    if table_env:
        values["table_path"] = Path(table_env)

    return Settings(**values)
