"""
Exception hierarchy for AW Forge.

Every error carries the structured fields the CLI echoes into reports. Errors
deriving from PreconditionError map to exit code 2; mathematical failures are
report data and never raised.
"""

from typing import Any, Optional, Tuple


class AWForgeError(Exception):
    """Base class for all AW Forge errors."""

    def to_dict(self) -> dict:
        """Structured description used in reports."""
        details = {k: str(v) for k, v in vars(self).items() if not k.startswith("_")}
        return {"error": type(self).__name__, "message": str(self), **details}


class PreconditionError(AWForgeError):
    """Input or construction precondition violated (CLI exit code 2)."""


class DegenerateBase(PreconditionError):
    """Deformation parameter with q^2 = 1 (or q = 0) where a q-bracket is needed."""

    def __init__(self, q: Any, reason: str = "q^2 = 1"):
        self.q = q
        super().__init__(f"Degenerate base q={q}: {reason}")


class InvalidLabel(PreconditionError):
    """Representation label outside the admissible range."""

    def __init__(self, label: Any, reason: str):
        self.label = label
        self.reason = reason
        super().__init__(f"Invalid representation label {label}: {reason}")


class InvalidScalar(PreconditionError):
    """Value that cannot be represented in the requested scalar mode."""

    def __init__(self, value: Any, mode: str, reason: str = ""):
        self.value = value
        self.mode = mode
        suffix = f" ({reason})" if reason else ""
        super().__init__(f"Cannot use {value!r} in {mode} mode{suffix}")


class NonTerminating(PreconditionError):
    """Series without a terminating numerator parameter and no term count."""

    def __init__(self):
        super().__init__("Series has no terminating parameter and n_terms was not supplied")


class PoleInDenominator(PreconditionError):
    """A denominator Pochhammer factor vanishes before the series terminates."""

    def __init__(self, index: int, parameter: Any):
        self.index = index
        self.parameter = parameter
        super().__init__(f"Denominator parameter {parameter} vanishes at term {index}")


class DenominatorVanishes(PreconditionError):
    """A realization denominator is zero on some basis vector."""

    def __init__(self, index: int, factor: str):
        self.index = index
        self.factor = factor
        super().__init__(f"Denominator factor {factor} vanishes at basis index n={index}")


class WrongAlgebra(PreconditionError):
    """Realization requested over an algebra it is not defined on."""

    def __init__(self, realization: str, algebra: str):
        self.realization = realization
        self.algebra = algebra
        super().__init__(f"Realization '{realization}' is not defined over '{algebra}'")


class ZeroParameterA(PreconditionError):
    """The Askey-Wilson realization divides by its parameter a."""

    def __init__(self):
        super().__init__("Askey-Wilson realization requires a != 0")


class DimensionMismatch(PreconditionError):
    """Matrices of incompatible shape."""

    def __init__(self, shapes: Tuple):
        self.shapes = shapes
        super().__init__(f"Incompatible matrix shapes: {shapes}")


class UnknownCase(PreconditionError):
    """No tabulated data for the requested realization or family."""

    def __init__(self, name: str, supported: Optional[str] = None):
        self.name = name
        hint = f". Supported: {supported}" if supported else ""
        super().__init__(f"Unknown case: {name}{hint}")


class NotTridiagonal(PreconditionError):
    """Matrix has entries outside the three central diagonals."""

    def __init__(self, index: Tuple[int, int]):
        self.index = index
        super().__init__(f"Matrix is not tridiagonal: nonzero entry at {index}")


class NonUnitSuperdiagonal(PreconditionError):
    """Tridiagonal matrix whose superdiagonal is not identically 1."""

    def __init__(self, index: int):
        self.index = index
        super().__init__(f"Superdiagonal entry ({index}, {index + 1}) is not 1")


class ConvergenceFailure(AWForgeError):
    """Numerical eigenvalue computation did not converge."""

    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(f"Eigenvalue computation failed: {reason}")


class SideConditionViolated(PreconditionError):
    """Family parameters outside the range the identification is stated for."""

    def __init__(self, family: str, condition: str):
        self.family = family
        self.condition = condition
        super().__init__(f"Family '{family}' requires {condition}")
