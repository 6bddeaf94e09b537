"""Print colorized warnings, errors, and debug messages to standard error.

Standard output is reserved for JSON payloads, so every message printed here
goes to ``sys.stderr``.  The amount of output is controlled by a module-level
verbosity that the command-line interface sets from configuration and flags.
"""
import sys
from typing import NoReturn

import colorama

# pylint: disable=invalid-name, global-statement


colorama.init(autoreset=True)
RESET = colorama.Fore.WHITE
LEVEL_COLORS = {
    "DEBUG": colorama.Fore.LIGHTMAGENTA_EX,
    "INFO": colorama.Fore.LIGHTCYAN_EX,
    "WARNING": colorama.Fore.LIGHTYELLOW_EX,
    "FAILURE": colorama.Fore.LIGHTRED_EX,
}


QUIET = 0
WARNINGS = 1
VERBOSE = 2
DEBUGGING = 3
_verbosity = WARNINGS


def set_verbosity(level: int) -> None:
    """Set the threshold for console messages.

    Parameters
    ----------
    level : int
        0 silences everything but failures, 1 prints warnings, 2 adds
        informational messages and 3 adds debug output.

    Raises
    ------
    ValueError
        If `level` is negative.
    """
    global _verbosity
    if level < 0:
        raise ValueError(f"verbosity must be non-negative, not {level}")
    _verbosity = level


def verbosity() -> int:
    """Get the current message threshold.

    Returns
    -------
    int
        The level last passed to :func:`set_verbosity`.
    """
    return _verbosity


def _emit(level: str, message: str) -> None:
    print(f"{LEVEL_COLORS[level]}{level}{RESET}: {message}", file=sys.stderr)


def DEBUG(message: str) -> None:
    """Report internal progress when verbosity is at least 3."""
    if _verbosity >= DEBUGGING:
        _emit("DEBUG", message)


def INFO(message: str) -> None:
    """Report a step of a long computation when verbosity is at least 2."""
    if _verbosity >= VERBOSE:
        _emit("INFO", message)


def WARN(message: str) -> None:
    """Report a degraded result, such as bounds in place of a group.

    Silenced only at verbosity 0.
    """
    if _verbosity >= WARNINGS:
        _emit("WARNING", message)


def FAIL(message: str) -> NoReturn:
    """Report a usage or input error and exit with status 1.

    Printed at every verbosity.

    Parameters
    ----------
    message : str
        What was wrong with the input.
    """
    _emit("FAILURE", message)
    sys.exit(1)
