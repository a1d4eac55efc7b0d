"""Exception types shared across the package.

``InputError`` marks problems with user-supplied data (bad syntax, unknown
names, malformed configuration); the CLI maps these to exit code 3.
``MismatchError`` marks failed cross-checks (exit code 2).  Everything else
is an ordinary computation error (exit code 1).
"""

from __future__ import annotations


class VlinkhomError(Exception):
    """Base class for all package errors."""


class InputError(VlinkhomError):
    """Marker for errors caused by bad user input."""


class MismatchError(VlinkhomError):
    """Marker for failed internal cross-checks and invariance mismatches."""


# -- theory construction -----------------------------------------------------

class NotInvertible(InputError):
    def __init__(self, name, value=None):
        self.name = name
        self.value = value
        super().__init__(f"parameter {name!r} is not invertible"
                         + (f" (value {value})" if value is not None else ""))


class ConstraintViolated(InputError):
    """A defining equation of the theory fails; carries the residual."""

    def __init__(self, equation, residual):
        self.equation = equation
        self.residual = residual
        super().__init__(f"constraint {equation} violated, residual {residual}")


class UnknownPreset(InputError):
    def __init__(self, name):
        self.name = name
        super().__init__(f"unknown theory preset {name!r}")


# -- diagram parsing and validation ------------------------------------------

class BadSyntax(InputError):
    def __init__(self, position, message=""):
        self.position = position
        super().__init__(f"bad syntax at position {position}"
                         + (f": {message}" if message else ""))


class DuplicateRole(InputError):
    def __init__(self, label, role):
        self.label = label
        self.role = role
        super().__init__(f"crossing {label} has more than one {role} passage")


class MissingPassage(InputError):
    def __init__(self, label):
        self.label = label
        super().__init__(f"crossing {label} is missing a passage "
                         "(labels must be 1..n, each once over and once under)")


class SignMismatch(InputError):
    def __init__(self, label):
        self.label = label
        super().__init__(f"the two passages of crossing {label} carry different signs")


# -- cube / complex -----------------------------------------------------------

class LengthMismatch(InputError):
    def __init__(self, expected, got):
        self.expected = expected
        self.got = got
        super().__init__(f"state length {got} does not match crossing count {expected}")


class NotCubeEdge(VlinkhomError):
    def __init__(self, s, t):
        super().__init__(f"{s!r} -> {t!r} is not a cube edge (need one 0->1 flip)")


class DimensionMismatch(VlinkhomError):
    def __init__(self, message):
        super().__init__(message)


class DSquaredNonzero(VlinkhomError):
    """d∘d has a nonzero entry; signals a twist-convention bug.

    Carries a witness: (degree, source label, target label, value).
    """

    def __init__(self, degree, source, target, value):
        self.degree = degree
        self.source = source
        self.target = target
        self.value = value
        super().__init__(
            f"d^2 != 0 at degree {degree}: {source} -> {target} has value {value}")


class NotGraded(VlinkhomError):
    def __init__(self, reason):
        super().__init__(f"theory is not quantum-graded: {reason}")


# -- moves / harness ----------------------------------------------------------

class PatternNotFound(InputError):
    def __init__(self, message):
        super().__init__(message)


class MismatchFound(MismatchError):
    def __init__(self, message, trail=None):
        self.trail = trail or []
        super().__init__(message)
