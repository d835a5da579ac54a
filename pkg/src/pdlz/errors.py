class DomainError(ValueError):
    """An argument lies outside the domain where an operation is defined."""


class ResourceLimitError(ValueError):
    """A size guard from :class:`pdlz.config.Limits` was exceeded."""


class StructuralError(ValueError):
    """A factorization does not describe a valid tiling of its text.

    ``phrase_index`` names the offending phrase when one can be identified.
    """

    def __init__(self, message, phrase_index=None):
        super().__init__(message)
        self.phrase_index = phrase_index
