"""Shared exception types."""

from __future__ import annotations


class NotAYoungDiagramError(ValueError):
    """A box set that should have been a Young diagram is not one."""

    def __init__(self, message: str, boxes=None, ladder=None):
        super().__init__(message)
        self.boxes = boxes
        self.ladder = ladder


class ConventionError(RuntimeError):
    """An internal invariant of the good-box convention failed.

    Raised when a step that theory guarantees (e.g. the mirrored good
    addable cell in the Mullineux recursion) is missing; signals a broken
    orientation, not bad user input.
    """


class NeitherRegularNorRestrictedError(ValueError):
    """A partition fails both regularity and restrictedness at a base."""
