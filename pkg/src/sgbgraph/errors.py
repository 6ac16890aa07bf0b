"""Exception hierarchy shared by every module."""

from __future__ import annotations


class SgbError(Exception):
    """Base class for all errors raised by sgbgraph."""


class InvalidParameter(SgbError, ValueError):
    pass


class InvalidElement(SgbError, ValueError):
    pass


class InvalidInput(SgbError, ValueError):
    pass


class InvalidSpec(SgbError, ValueError):
    pass


class ResourceLimit(SgbError):
    pass


class NotFound(SgbError, LookupError):
    pass


class InternalInconsistency(SgbError, RuntimeError):
    """An arithmetic or structural self-check failed. Always a bug."""


class NonIntegralResult(InternalInconsistency):
    pass


class GroupIOError(SgbError, OSError):
    def __init__(self, path, reason):
        super().__init__(f"{path}: {reason}")
        self.path = str(path)
        self.reason = reason


class NotAGroup(SgbError, ValueError):
    """A Cayley table failed one of the group axioms.

    ``kind`` is one of ``"shape"``, ``"range"``, ``"latin-square"``,
    ``"identity"``, ``"inverse"`` or ``"associativity"``; ``witness`` holds
    the offending row, element or triple when there is one.
    """

    def __init__(self, kind, witness=None):
        msg = f"not a group ({kind})"
        if witness is not None:
            msg += f": witness {witness}"
        super().__init__(msg)
        self.kind = kind
        self.witness = witness
