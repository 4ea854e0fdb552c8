"""Exception types shared across the package."""


class LengthMismatchError(ValueError):
    """Two fixed-length objects (bit vectors, operators, states) disagree on length."""


class NonHermitianSignError(ValueError):
    """A Pauli operator carries phase +-i where a plain sign was required.

    Products of graph-state stabilizer generators always have phase 0 or 2;
    hitting this error means an upstream bookkeeping bug.
    """


class UnsupportedInputError(ValueError):
    """Input outside the supported domain (disconnected graph, too few qubits)."""


class ResourceLimitError(RuntimeError):
    """A guard against search or memory blow-up fired."""


class ParseError(ValueError):
    """Malformed graph or distribution text. Carries the offending position."""

    def __init__(self, message, text=None, position=None):
        self.message = message
        self.text = text
        self.position = position
        super().__init__(str(self))

    def __str__(self):
        if self.position is None:
            return self.message
        return f"{self.message} (at position {self.position})"
