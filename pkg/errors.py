"""Exceptions shared by every package."""


class BinarityError(Exception):
    """Base class for errors raised by the binarity toolkit."""


class PermutationError(ValueError):
    """Malformed permutation text or image table."""


class DegreeMismatch(PermutationError):
    def __init__(self, left: int, right: int):
        super().__init__(f"degree mismatch: {left} vs {right}")
        self.left = left
        self.right = right


class NotInOrbit(ValueError):
    pass


class NotAMember(BinarityError):
    """An element expected to lie in a group does not."""


class NotASubgroup(BinarityError):
    pass


class DegreeCapExceeded(BinarityError):
    def __init__(self, what: str, degree: int, cap: int):
        super().__init__(f"{what} of degree {degree} exceeds cap {cap}")
        self.degree = degree
        self.cap = cap


class BudgetExceeded(BinarityError):
    """A search ran out of its node, tuple or enumeration budget."""

    def __init__(self, name: str, limit: int, used: int):
        super().__init__(f"{name} budget exceeded ({used} > {limit})")
        self.name = name
        self.limit = limit
        self.used = used


class NonIntegralFormula(ValueError):
    """Fixed-point formula inputs that do not divide exactly."""


class InvalidGroupFile(ValueError):
    """A group or certificate file that parses but is inconsistent."""
