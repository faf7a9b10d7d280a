"""Exception types shared across the package."""


class ParseError(ValueError):
    """Malformed polynomial or divisor expression.

    ``position`` is the 0-based character offset of the offending token.
    """

    def __init__(self, message, text="", position=0):
        self.text = text
        self.position = position
        super().__init__(f"{message} (at position {position})")


class DegreeError(ValueError):
    pass


class TableError(ValueError):
    pass


class DomainError(ValueError):
    pass


class NotRationalError(ArithmeticError):
    pass


class OrderOverflowError(ArithmeticError):
    pass
