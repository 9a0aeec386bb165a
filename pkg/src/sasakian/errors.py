"""Exception types shared across the package."""

from __future__ import annotations


class InvalidLieTypeError(ValueError):
    """Series/rank combination outside the simple classification."""


class NotARootError(ValueError):
    """A vector claimed to be a root of the ambient system is not."""


class NotMaximalError(ValueError):
    """The chosen root fails the maximality criterion |c| <= 2."""


class SignConsistencyError(RuntimeError):
    """Structure-constant bookkeeping produced an inconsistent value."""


class VerificationError(RuntimeError):
    """An identity that must hold exactly has a nonzero residual."""

    def __init__(self, check: str, detail: str):
        self.check = check
        self.detail = detail
        super().__init__(f"{check}: {detail}")
