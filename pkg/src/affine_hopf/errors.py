class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class StructuralError(ValueError):
    """Shapes or dimensions of the inputs do not fit together."""


class ExistenceError(DomainError):
    """No affine Hopf fibration exists for the requested dimensions."""


class EquatorialFiberError(DomainError):
    """The fiber lies in the hyperplane removed by the central projection."""


class ConsistencyError(RuntimeError):
    """An internal invariant failed; the input family is broken."""


class NormalizationError(ConsistencyError):
    """The last-column map of a dual family is singular."""
