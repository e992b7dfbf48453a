"""Exception hierarchy shared by every module of the package."""


class SplitLieError(Exception):
    """Base class for all errors raised by :mod:`splitlie`."""


class DimensionMismatch(SplitLieError, ValueError):
    pass


class NotSplitOverField(SplitLieError):
    """An operator has eigenvalues outside Q or is not diagonalizable."""


class NonCommuting(SplitLieError):
    pass


class JacobiViolation(SplitLieError):
    def __init__(self, triple, names=None):
        self.triple = tuple(triple)
        if names is not None:
            label = ", ".join(names[i] for i in self.triple)
        else:
            label = ", ".join(str(i) for i in self.triple)
        super().__init__(f"Jacobi identity fails on basis triple ({label})")


class ModuleAxiomViolation(SplitLieError):
    def __init__(self, i, j, a, names=None, module_names=None):
        self.triple = (i, j, a)
        if names is not None and module_names is not None:
            label = f"{names[i]}, {names[j]}, {module_names[a]}"
        else:
            label = f"{i}, {j}, {a}"
        super().__init__(f"[x,y].v = x.(y.v) - y.(x.v) fails on ({label})")


class CartanNotAbelian(SplitLieError):
    pass


class NotSelfCentralizing(SplitLieError):
    """The zero weight space of the Cartan action is larger than H."""


class NotWeightModule(SplitLieError):
    pass


class SymmetryViolation(SplitLieError):
    """A root or weight system is not closed under negation."""


class MismatchedAlgebra(SplitLieError):
    pass


class PreconditionFailed(SplitLieError):
    def __init__(self, predicate, detail=""):
        self.predicate = predicate
        msg = f"precondition failed: {predicate}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class ValidationFailed(SplitLieError):
    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("involution validation failed: " + "; ".join(self.violations))


class InputError(SplitLieError):
    """Malformed input file; the message names the offending field."""
