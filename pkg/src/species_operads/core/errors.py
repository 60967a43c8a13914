"""
Exception hierarchy for species-operads.

Every error raised by the library derives from OperadError. Errors caused by
a bad argument also derive from ValueError so callers can catch them
generically.
"""

from typing import Optional


class OperadError(Exception):
    """Base class for all library errors"""

    pass


class DomainError(OperadError, ValueError):
    """A label is outside the set it must belong to, or a set is empty"""

    pass


class DisjointnessError(OperadError, ValueError):
    """Two label sets that must be disjoint overlap"""

    pass


class BijectionError(OperadError, ValueError):
    """A mapping is not a bijection between the declared sets"""

    pass


class PartitionError(OperadError, ValueError):
    """Blocks do not form a partition, or a block is missing"""

    pass


class TreeError(OperadError, ValueError):
    """Malformed tree (repeated vertex, wrong node type, unknown vertex)"""

    pass


class TreeSyntaxError(TreeError):
    """Tree or element expression failed to parse"""

    def __init__(self, message: str, text: str = "", position: Optional[int] = None):
        self.text = text
        self.position = position
        if position is not None:
            message = f"{message} at position {position}"
            if text:
                message += f": {text[:position]}<!>{text[position:]}"
        super().__init__(message)


class DuplicateLabelError(TreeError):
    """The same label appears twice in one tree or element"""

    pass


class OperadNotFoundError(OperadError, LookupError):
    """Requested operad selector is not registered"""

    pass


class SelectorMismatchError(OperadError, ValueError):
    """An operand does not belong to the selected operad"""

    pass


class BoundsTooLargeError(OperadError):
    """A law check would enumerate more instances than allowed"""

    pass


class InvalidBaseOperadError(OperadError):
    """The operad q fails its own axioms, so P∘q cannot be checked"""

    pass


class SuiteNotFoundError(OperadError, LookupError):
    """Requested law-check suite is not defined"""

    pass
