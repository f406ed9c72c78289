"""Shared failure types."""


class AuditFailure(RuntimeError):
    """A self-check that must hold by construction did not.

    Raised instead of returning a possibly wrong count when an enumeration
    bound or accounting identity fails its runtime audit.
    """
