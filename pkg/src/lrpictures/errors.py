class BudgetExceeded(RuntimeError):
    """An enumeration or sweep would exceed its configured cap."""


class ContractViolation(ValueError):
    """Phi or Psi was handed an input outside its domain."""


class OrderValidationError(ValueError):
    """An order is not a permutation of its domain, or is not admissible."""

    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair
