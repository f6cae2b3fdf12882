"""Shared exception types."""


class ParseError(ValueError):
    """Malformed text input; the message names the offending line."""


class BudgetError(RuntimeError):
    """An exact-search budget (edge count, variable count, part cap) was exceeded."""


class GadgetError(ValueError):
    """A gadget file failed structural validation."""
