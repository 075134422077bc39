class NonGenericParameters(ValueError):
    """Raised when an operation needs mu1+mu2 (or mu1, mu2) non-integral."""


class RequiresIntegralMu2(ValueError):
    """Raised when a subquotient construction needs mu2 to be an integer."""


class BasisMismatch(ValueError):
    """Raised when elements in different bases (or parameters) are combined."""


class ObstructionAtIndex(Exception):
    """Recurrence propagation hit a vanishing ratio denominator.

    Signals non-existence of an invertible intertwiner through the stored
    index.
    """

    def __init__(self, index, generator, detail=""):
        self.index = index
        self.generator = generator
        self.detail = detail
        msg = f"obstruction at index {index} via {generator}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)
