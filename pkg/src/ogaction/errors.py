"""Exception types shared across the workbench."""


class WorkbenchError(Exception):
    """Base class for all workbench errors."""


class AmbientMismatch(WorkbenchError):
    """Two linear objects live in different ambient spaces or moduli."""


class InvalidAlgebra(WorkbenchError):
    """Structure constants fail associativity or the stated unit is not one."""


class NotMultiplicativelyClosed(WorkbenchError):
    """A subspace expected to be closed under the product is not."""


class NotContained(WorkbenchError):
    """The inner subspace is not contained in the outer one."""


class NotAnIdeal(WorkbenchError):
    """A subspace expected to be a two-sided ideal is not."""


class NotCentralIdempotent(WorkbenchError):
    """A local-unit candidate is not a central idempotent."""


class InvalidGroupoid(WorkbenchError):
    """Category, inverse, or order axioms fail for a groupoid."""


class NotBelowDomain(WorkbenchError):
    """Restriction requested at an object not below the arrow's domain."""


class NotBelowRange(WorkbenchError):
    """Corestriction requested at an object not below the arrow's range."""


class NotInductive(WorkbenchError):
    """The groupoid's objects do not form a meet semilattice."""


class NotPseudoassociative(WorkbenchError):
    """Pseudoproduct existence is not associative on some triple."""


class InvalidSemigroup(WorkbenchError):
    """Inverse-semigroup axioms fail for a multiplication table."""


class InvalidAction(WorkbenchError):
    """A partial action fails its axioms where validity is a precondition."""


class NotGlobal(WorkbenchError):
    """The action is not global (some ideal differs from its range ideal)."""


class NotMonotone(WorkbenchError):
    """A restriction family is not monotone along the object order."""


class NotPreunital(WorkbenchError):
    """Some object ideal has no central idempotent identity."""


class NotUnital(WorkbenchError):
    """Some arrow ideal has no central idempotent identity."""

    def __init__(self, message: str, arrow: int | None = None):
        super().__init__(message)
        self.arrow = arrow


class NotStrong(WorkbenchError):
    """The action fails the corestriction-intersection law."""


class GroupoidMismatch(WorkbenchError):
    """An action's groupoid is not the one derived from the semigroup."""


class NotAssociative(WorkbenchError):
    """A skew ring has a nonzero associator; the ordered quotient needs none."""


class NotAGlobalization(WorkbenchError):
    """The supplied global action fails the globalization checklist."""


class BudgetExceeded(WorkbenchError):
    """An enumeration would exceed the caller's node budget (inconclusive)."""


class WorkspaceError(WorkbenchError):
    """A workspace file is malformed or contains dangling references."""
