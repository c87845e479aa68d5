"""Completeness of positive linear recurrence sequences.

Coefficient vectors are plain lists of non-negative integers. Verdicts are
returned as dicts with the same fields as the JSON written by the ``plrs`` tool.
"""

from ._plrs import *  # noqa: F401,F403
from ._plrs import PlrsError

__all__ = [name for name in dir() if not name.startswith("_")]
