"""Custom exceptions for the PCFA workbench."""
from enum import Enum
from typing import Optional, Tuple


class WorkbenchError(Exception):
    """Base exception for all workbench errors."""
    pass


class ValidationCode(str, Enum):
    LAMBDA_CONFLICT = "LAMBDA_CONFLICT"
    QUERY_SOURCE = "QUERY_SOURCE"
    NONCENTRAL_QUERY = "NONCENTRAL_QUERY"
    BAD_REFERENCE = "BAD_REFERENCE"
    BAD_DEFINITION = "BAD_DEFINITION"


class SystemValidationError(WorkbenchError):
    """Raised when a system definition violates a structural invariant."""
    def __init__(self, code: ValidationCode, message: str, component: Optional[int] = None):
        self.code = code
        self.message = message
        self.component = component
        where = f" (component {component})" if component is not None else ""
        super().__init__(f"{code.value}{where}: {message}")


class AlphabetViolationError(WorkbenchError):
    """Raised when a word contains a symbol outside the input alphabet."""
    def __init__(self, symbol: str, position: int):
        self.symbol = symbol
        self.position = position
        super().__init__(f"ALPHABET_VIOLATION: symbol {symbol!r} at position {position} is not in the input alphabet")


class BoundOverflowError(WorkbenchError):
    """Raised when the decision cutoff exceeds the configured ceiling."""
    def __init__(self, required: int, ceiling: int):
        self.required = required
        self.ceiling = ceiling
        super().__init__(f"OVERFLOW: decision bound {required} exceeds ceiling {ceiling}")


class BudgetExceededError(WorkbenchError):
    """Raised when an exhaustive enumeration would exceed its budget."""
    def __init__(self, required: int, ceiling: int):
        self.required = required
        self.ceiling = ceiling
        super().__init__(f"BUDGET_EXCEEDED: {required} words exceed ceiling {ceiling}")


class BadParamError(WorkbenchError):
    """Raised when a generator or command receives an unusable parameter."""
    def __init__(self, message: str):
        self.message = message
        super().__init__(f"BAD_PARAM: {message}")


class ParseError(WorkbenchError):
    """Raised when a system, OCA or VALC file cannot be parsed."""
    def __init__(self, message: str, line_no: Optional[int] = None, source: Optional[str] = None):
        self.message = message
        self.line_no = line_no
        self.source = source
        where = source or "<input>"
        if line_no is not None:
            where = f"{where}:{line_no}"
        super().__init__(f"{where}: {message}")


class ConfigurationError(WorkbenchError):
    """Raised when there's a configuration issue."""
    pass


# OCA specific exceptions
class OcaError(WorkbenchError):
    """Base exception for one-way cellular automaton errors."""
    pass


class OcaDefinitionError(OcaError):
    """Raised when an OCA definition is inconsistent."""
    pass


class DeltaUndefinedError(OcaError):
    """Raised when the local transition is undefined on a reached pair."""
    def __init__(self, left: str, own: str, cell: Optional[int] = None, t: Optional[int] = None):
        self.left = left
        self.own = own
        self.cell = cell
        self.t = t
        super().__init__(f"DELTA_UNDEFINED: no transition for pair ({left}, {own}) at cell {cell}, time {t}")

    @property
    def pair(self) -> Tuple[str, str]:
        return (self.left, self.own)


class NotComputedError(OcaError):
    """Raised when the rightmost cell never accepts within the horizon."""
    def __init__(self, n: int, max_t: int):
        self.n = n
        self.max_t = max_t
        super().__init__(f"NOT_COMPUTED: no acceptance on input length {n} within {max_t} steps")


class NotAcceptedError(OcaError):
    """Raised when a word to be encoded is not accepted."""
    def __init__(self, max_t: int):
        self.max_t = max_t
        super().__init__(f"NOT_ACCEPTED: word not accepted within {max_t} steps")


class TooShortError(OcaError):
    """Raised when an accepting computation has fewer than three steps."""
    def __init__(self, accepted_at: int):
        self.accepted_at = accepted_at
        super().__init__(f"TOO_SHORT: accepting time {accepted_at} is below 3")
