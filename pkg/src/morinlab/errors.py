"""Exception hierarchy shared by all modules."""


class MorinlabError(Exception):
    pass


class DimensionError(MorinlabError):
    """Incompatible variable counts, orders, or matrix shapes."""


class TruncationError(MorinlabError):
    """The input jet order is too low to support the requested conclusion."""

    def __init__(self, required_order: int, message: str = ""):
        self.required_order = required_order
        super().__init__(message or f"truncation order >= {required_order} required")


class NotCorankOneError(MorinlabError):
    """Germ has corank != 1 at the origin."""

    def __init__(self, corank: int):
        self.corank = corank
        super().__init__(f"germ has corank {corank} at the origin, expected 1")


class SingularMatrixError(MorinlabError):
    """Constant term of a jet matrix is singular where invertibility is required."""


class FrameError(MorinlabError):
    """A framed curve violates one of its defining identities."""


class ParityError(MorinlabError):
    """A rotation index set has odd cardinality (would reverse orientation)."""


class WitnessError(MorinlabError):
    """No rotation witness exists for the requested reduction."""


class ParseError(MorinlabError):
    def __init__(self, message: str, line: int, column: int):
        self.line = line
        self.column = column
        super().__init__(f"{message} (line {line}, column {column})")
