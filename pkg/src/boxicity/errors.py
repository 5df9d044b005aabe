"""Exception types raised by the library."""


class BoxicityError(ValueError):
    """A domain error: malformed input or a violated hypothesis."""


class CapExceeded(BoxicityError):
    """An exact search was asked to run beyond its configured size caps."""
