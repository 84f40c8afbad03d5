"""Exception hierarchy.

Input errors (bad polynomial, violated precondition) derive from
:class:`InputError`; broken internal invariants derive from
:class:`InternalError`.  The CLI maps the two families to exit codes 1 and 2.
"""


class PuiseuxError(Exception):
    """Base class for all errors raised by this package."""


class InputError(PuiseuxError):
    pass


class InternalError(PuiseuxError):
    pass


class ParseError(InputError, ValueError):
    pass


class ReducibleModulus(InputError, ValueError):
    pass


class ContextMismatch(InputError, TypeError):
    pass


class ZeroInversion(InputError, ZeroDivisionError):
    pass


class DivisionByZeroPoly(InputError, ZeroDivisionError):
    pass


class ZeroPolynomial(InputError, ValueError):
    pass


class BadPrimeDenominator(InputError, ValueError):
    pass


class NotSquarefree(InputError, ValueError):
    pass


class SmallCharacteristic(InputError, ValueError):
    pass


class TruncationTooSmall(InputError, ValueError):
    def __init__(self, trunc, minimal):
        super().__init__(f"truncation order {trunc} is below the singular part; need at least {minimal}")
        self.trunc = trunc
        self.minimal = minimal


class PrimeSearchExhausted(InternalError):
    """Raised when a random prime search runs out of candidates (defective rng)."""


class RetryBudgetExhausted(InputError):
    def __init__(self, message, rejected=()):
        super().__init__(message)
        self.rejected = list(rejected)


class NonExactDivision(InternalError):
    pass


class NonIntegralGenus(InternalError):
    pass


class SplittingFailure(InternalError):
    """Randomized equal-degree splitting did not succeed within its budget."""
