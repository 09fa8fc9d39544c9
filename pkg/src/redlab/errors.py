"""Exception hierarchy shared by every module of the package."""


class RedlabError(Exception):
    """Base class for all errors raised by redlab."""


class ZeroInverse(RedlabError, ZeroDivisionError):
    pass


class VariableMismatch(RedlabError, ValueError):
    pass


class RingMismatch(RedlabError, ValueError):
    pass


class NotCoprime(RedlabError, ValueError):
    def __init__(self, i, j):
        super().__init__(f"moduli {i} and {j} are not coprime")
        self.pair = (i, j)


class LengthMismatch(RedlabError, ValueError):
    pass


class PolynomialSyntaxError(RedlabError, ValueError):
    """Raised by the polynomial parser; carries a 1-based column."""

    def __init__(self, message, column, line=None):
        where = f"column {column}" if line is None else f"line {line}, column {column}"
        super().__init__(f"{where}: {message}")
        self.column = column
        self.line = line


class InputFormatError(RedlabError, ValueError):
    def __init__(self, message, line, column=1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class NotPrimary(RedlabError):
    """The ideal is not primary to the maximal ideal of the local ring."""


class CapExceeded(RedlabError):
    """A configured search or stabilization cap was reached without an answer."""

    def __init__(self, message, cap):
        super().__init__(message)
        self.cap = cap


class NotMinimalGenerators(RedlabError, ValueError):
    pass


class BadRank(RedlabError, ValueError):
    pass


class RetriesExhausted(RedlabError):
    pass


class NotIrreducible(RedlabError, ValueError):
    def __init__(self, index):
        super().__init__(f"maximal polynomial #{index} is not irreducible")
        self.index = index


class Duplicate(RedlabError, ValueError):
    def __init__(self, index):
        super().__init__(f"maximal polynomial #{index} repeats an earlier one")
        self.index = index


class NotEnoughMaximals(RedlabError, ValueError):
    pass


class CounterexampleFails(RedlabError):
    def __init__(self, candidate):
        super().__init__(f"candidate {candidate} does not survive")
        self.candidate = candidate


class ConverseFails(RedlabError):
    pass
