"""
Exception types raised by the metallic cube toolkit
"""


class MetallicCubeError(Exception):
    """Base class for every error raised by this package"""


class InvalidAlphabetError(MetallicCubeError, ValueError):
    """Alphabet size a must be at least 1"""


class InvalidLetterError(MetallicCubeError, ValueError):
    """A letter is larger than a, or letter a is not preceded by 0"""


class LengthMismatchError(MetallicCubeError, ValueError):
    """Two words that must have equal length (and alphabet) do not"""


class RankOutOfRangeError(MetallicCubeError, IndexError):
    """Index outside 0..s^a_n - 1"""


class CapExceededError(MetallicCubeError, RuntimeError):
    """A configured size cap would be exceeded"""

    def __init__(self, what: str, size: int, cap: int):
        self.what = what
        self.size = size
        self.cap = cap
        super().__init__(f"{what}: size {size} exceeds cap {cap}")


class UnsupportedParametersError(MetallicCubeError, ValueError):
    """The operation is not defined for these (a, n) values"""


class ConstructionError(MetallicCubeError, RuntimeError):
    """A constructive witness failed validation"""

    def __init__(self, message: str, transition=None):
        self.transition = transition
        super().__init__(message if transition is None else f"{message} at {transition}")


class InconsistencyError(MetallicCubeError, RuntimeError):
    """A computed object contradicts a proven property"""


class UnknownFormatError(MetallicCubeError, ValueError):
    """Export or table format not recognized"""


class VertexNotFoundError(MetallicCubeError, KeyError):
    """The word is not a vertex of this cube"""
