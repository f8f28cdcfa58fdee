"""Exception types shared by the package.

Two families matter to callers: a violated input hypothesis (the caller
asked for something the mathematics does not allow) and a violated
contract (a congruence or count that a theorem guarantees came out
wrong, which points at a bug or a mis-specified input).
"""


class PreconditionError(ValueError):
    """An input violates a hypothesis of the requested construction."""


class ContractError(RuntimeError):
    """A guaranteed property failed to hold on the computed data."""


class EnumerationLimit(RuntimeError):
    """A bounded enumeration hit its configured cap before finishing."""
