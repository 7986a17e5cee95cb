"""Exception types shared across the package."""


class PBKernelError(Exception):
    """Base class for errors raised by this package."""


class DimensionError(PBKernelError):
    """Operands have incompatible arities or vector lengths."""


class EnumerationCapError(PBKernelError):
    """A brute-force oracle was asked to enumerate past its 2^n cap."""


class NotDiagonalError(PBKernelError):
    """An operator contains X or Y letters where only I/Z are allowed."""


class NetlistError(PBKernelError):
    """A netlist binding is dangling or violates the wire role rule."""


class ParseError(PBKernelError):
    """Malformed textual input; carries a character position."""

    def __init__(self, message, position=None):
        super().__init__(message if position is None else f"{message} (at position {position})")
        self.position = position
