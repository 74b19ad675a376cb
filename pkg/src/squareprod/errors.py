class DomainError(ValueError):
    """Argument lies outside the domain an operation is defined on."""
