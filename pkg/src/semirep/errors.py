"""Exception hierarchy.

Everything raised on purpose derives from :class:`SemigroupError`.  The
:class:`InvariantViolation` branch marks internal consistency failures
(two independent routes disagreeing); the CLI maps those to exit code 2.
"""


class SemigroupError(Exception):
    pass


class InvariantViolation(SemigroupError):
    pass


class ParseError(SemigroupError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class SizeLimit(SemigroupError):
    pass


class AssociativityError(SemigroupError):
    def __init__(self, a, b, c):
        self.triple = (a, b, c)
        super().__init__(f"(a*b)*c != a*(b*c) for a={a}, b={b}, c={c}")


class ZeroAxiomError(SemigroupError):
    def __init__(self, a):
        self.element = a
        super().__init__(f"declared zero is not absorbing against element {a}")


class NotIdempotent(SemigroupError):
    pass


class NotRegular(SemigroupError):
    pass


class NotRegularClass(NotRegular):
    pass


class NotInvolution(SemigroupError):
    pass


class NotReesCompatible(SemigroupError):
    pass


class NotCorollaryForm(SemigroupError):
    pass


class NotSemisimple(SemigroupError):
    pass


class NotEquivalent(SemigroupError):
    pass


class NoApex(SemigroupError):
    pass


class ConditionFails(SemigroupError):
    pass


class IndefiniteError(SemigroupError):
    """Hermitian matrix is not positive definite; carries its inertia."""

    def __init__(self, positive, negative, zero=0):
        self.signature = (positive, negative)
        self.zero = zero
        super().__init__(
            f"matrix is not positive definite: signature ({positive}, {negative}), "
            f"{zero} null directions"
        )


class FactorizationObstruction(SemigroupError):
    """A Hermitian intertwiner cannot be written as B B^* for either sign.

    ``verdict`` holds whatever character-level result was computed before the
    constructive step failed (may be None).
    """

    def __init__(self, message, signature=None, verdict=None):
        self.signature = signature
        self.verdict = verdict
        super().__init__(message)


class OracleMismatch(InvariantViolation):
    pass


class MultipleSurvivors(InvariantViolation):
    pass
