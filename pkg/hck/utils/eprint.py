"""Printing diagnostic info to stderr."""

import sys
from typing import Any

EPRINT_ENABLED = False


def disable_eprint() -> None:
    """Disable diagnostic printing."""
    global EPRINT_ENABLED
    EPRINT_ENABLED = False


def enable_eprint() -> None:
    """Enable diagnostic printing."""
    global EPRINT_ENABLED
    EPRINT_ENABLED = True


def eprint(*args: Any, **kwargs: Any) -> None:
    """
    Print a diagnostic line to stderr if diagnostics are enabled.

    Nothing printed here is part of a command's result document; results go to
    stdout only.

    Args:
        args: Things to print.
        kwargs: More things to print.
    """
    if not EPRINT_ENABLED:
        return
    print(*args, file=sys.stderr, flush=True, **kwargs)
