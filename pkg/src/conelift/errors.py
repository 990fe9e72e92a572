"""Exception hierarchy shared by all modules."""


class ConeliftError(Exception):
    """Base class for every error raised by the package."""


class VarSetMismatch(ConeliftError):
    pass


class ArityError(ConeliftError):
    pass


class UnknownVariable(ConeliftError):
    pass


class InvalidFraction(ConeliftError):
    pass


class NotHomogeneous(ConeliftError):
    pass


class NotIntoCone(ConeliftError):
    pass


class DuplicatePoints(ConeliftError):
    pass


class BudgetExceeded(ConeliftError):
    """A Groebner computation used more reduction steps than allowed."""

    def __init__(self, budget):
        super().__init__(f"Groebner step budget of {budget} reduction steps exceeded")
        self.budget = budget


class BasePointDetected(ConeliftError):
    """The coordinate tuple has a common zero; ``basis`` is the proper Groebner basis."""

    def __init__(self, basis, message=None):
        self.basis = basis
        if message is None:
            elems = ", ".join(str(g) for g in basis.elements)
            message = f"coordinates have a common zero; Groebner basis {{{elems}}} is proper"
        super().__init__(message)


class ParseError(ConeliftError):
    def __init__(self, message, line=1, column=1):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column
