"""Exception types shared across the package."""


class InvalidParamsError(ValueError):
    """Construction parameters or arguments violate a required condition."""


class DomainError(ValueError):
    """An operation was invoked outside its stated domain."""


class ResourceLimitError(RuntimeError):
    """A computation would exceed the configured memory budget."""

    def __init__(self, message: str, *, required_bytes: int, cap_bytes: int):
        super().__init__(message)
        self.required_bytes = required_bytes
        self.cap_bytes = cap_bytes
