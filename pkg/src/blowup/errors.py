"""Exception types shared across the package."""


class BlowupError(ValueError):
    """Base class for domain errors (bad inputs that parse fine)."""


class DimensionMismatchError(BlowupError):
    pass


class DegenerateInputError(BlowupError):
    pass


class DivisorParseError(BlowupError):
    pass


class InvalidRadicandError(BlowupError):
    pass


class UnsupportedError(BlowupError):
    pass


class InvalidSampleError(BlowupError):
    pass


class CharacteristicError(BlowupError):
    pass


class InvalidAnchorError(BlowupError):
    pass
