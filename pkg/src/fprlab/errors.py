"""Exception hierarchy shared by every fprlab module."""


class FprlabError(Exception):
    """Base class for all fprlab errors."""


class DegreeMismatch(FprlabError, ValueError):
    pass


class NotAPermutation(FprlabError, ValueError):
    pass


class MembershipError(FprlabError, ValueError):
    """An element was expected to lie in a group and does not."""


class NotTransitive(FprlabError, ValueError):
    pass


class NotASubgroup(FprlabError, ValueError):
    pass


class CapExceeded(FprlabError, RuntimeError):
    """A configured size cap (degree, order, ...) would be exceeded."""

    def __init__(self, what, value, cap):
        super().__init__(f"{what} {value} exceeds cap {cap}")
        self.what = what
        self.value = value
        self.cap = cap


class SpecSyntaxError(FprlabError, ValueError):
    """Malformed group/action spec string; `position` is a 0-based offset."""

    def __init__(self, message, text="", position=0):
        super().__init__(f"{message} at position {position} in {text!r}")
        self.text = text
        self.position = position


class SpecSemanticError(FprlabError, ValueError):
    pass


class UnsupportedGroup(FprlabError, ValueError):
    pass


class SingularMatrix(FprlabError, ValueError):
    pass


class GenusError(FprlabError, ValueError):
    pass


class IncompleteClassTable(FprlabError, RuntimeError):
    pass
