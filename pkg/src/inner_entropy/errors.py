"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class PoleError(DomainError):
    """Evaluation was requested at (or too close to) a zero of the function."""


class RepresentationError(DomainError):
    """Exact arithmetic was required but the data is only approximate."""


class ConsistencyError(RuntimeError):
    """An internal identity failed beyond tolerance; signals an evaluation bug."""


class BudgetError(RuntimeError):
    """An adaptive computation exhausted its subdivision budget."""


class SchemaError(ValueError):
    """An input file does not match the expected JSON layout."""
