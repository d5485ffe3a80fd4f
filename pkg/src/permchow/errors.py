"""Shared exception types and size-guard handling.

Most algorithms here have factorial or exponential cost, so each entry
point enforces a dimension guard.  Setting the environment variable
``PERMCHOW_GUARD_OVERRIDE`` to a non-empty value lifts every guard; this
is a footgun intended for people who know how long 2^n seconds is.
"""

from __future__ import annotations

import os


class GuardError(ValueError):
    """A dimension guard was exceeded."""


class InexactDivisionError(ArithmeticError):
    """An integer division that must be exact left a remainder.

    This signals an internal bug (the algorithms guarantee divisibility),
    never a problem with the input.
    """


def guards_overridden() -> bool:
    return bool(os.environ.get("PERMCHOW_GUARD_OVERRIDE"))


def check_guard(n: int, limit: int, what: str) -> None:
    """Raise GuardError if ``n`` exceeds ``limit`` and no override is set."""
    if n > limit and not guards_overridden():
        raise GuardError(
            f"{what}: n={n} exceeds the guard n<={limit} "
            "(set PERMCHOW_GUARD_OVERRIDE=1 to lift)"
        )
