class TranscriptionError(RuntimeError):
    """A built-in formula failed an internal consistency check."""


class CrystallographyError(ArithmeticError):
    """A Cartan scalar that must be rational or integral was not."""


class ModeError(ValueError):
    """Exact and numeric data were mixed, or a mode is unsupported."""
