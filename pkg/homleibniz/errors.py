"""Exception roots shared by every homleibniz module."""

from __future__ import annotations

from typing import Any


class HomLeibnizError(Exception):
    """Base class for errors raised by homleibniz.

    :param message: Human-readable description.
    :type message: str
    :param witness: Optional structured evidence (subspace, vector or index tuple).
    :type witness: typing.Any
    """

    def __init__(self, message: str, witness: Any = None) -> None:
        super().__init__(message)
        self.witness = witness


class InternalInconsistencyError(HomLeibnizError):
    """Raised when a theorem-backed postcondition fails on concrete data."""
