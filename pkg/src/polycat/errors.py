"""Exception hierarchy shared by every module."""


class AlgebraError(Exception):
    """Base class for all errors raised by polycat."""


class DivisionByZeroError(AlgebraError, ZeroDivisionError):
    pass


class InexactDivisionError(AlgebraError, ArithmeticError):
    """The divisor does not divide the dividend in the coefficient domain."""


class InvalidModulusError(AlgebraError, ValueError):
    pass


class SingularMatrixError(AlgebraError, ZeroDivisionError):
    pass


class UnsupportedOperationError(AlgebraError, TypeError):
    """The domain does not provide the requested operation."""


class UnsupportedStructureError(AlgebraError, TypeError):
    """A domain lacks an operation required to check a structure kind."""


class ArityError(AlgebraError, ValueError):
    pass


class NonDivisibleError(AlgebraError, ValueError):
    """Exponent-vector subtraction would produce a negative coordinate."""


class DecodeError(AlgebraError, ValueError):
    pass


class TableExhaustedError(AlgebraError, ValueError):
    pass


class EmptyPolynomialError(AlgebraError, ValueError):
    pass


class MonomialNotFoundError(AlgebraError, KeyError):
    pass


class RingMismatchError(AlgebraError, ValueError):
    pass


class UnsupportedDomainError(AlgebraError, ValueError):
    """Groebner routines need the integers or a prime modulus."""


class BudgetExceededError(AlgebraError, RuntimeError):
    def __init__(self, message, steps=None):
        super().__init__(message)
        self.steps = steps


class ParseError(AlgebraError, ValueError):
    def __init__(self, message, text="", position=0):
        self.reason = message
        self.text = text
        self.position = position
        super().__init__(f"{message} at offset {position}")


class ProblemFormatError(AlgebraError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)
