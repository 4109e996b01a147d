"""Exception hierarchy for clarcube."""


class ClarCubeError(Exception):
    """Base class for all clarcube errors."""


# --- embedded graph construction ---

class GraphError(ClarCubeError):
    """Invalid embedded-graph data."""


class LoopEdgeError(GraphError):
    """An edge joins a vertex to itself."""


class ParallelEdgeError(GraphError):
    """Two edges share the same unordered endpoint pair."""


class RotationMismatchError(GraphError):
    """Rotation lists disagree with the edge incidences."""


class DisconnectedGraphError(GraphError):
    """Operation requires a connected graph."""


# --- face sets ---

class FaceSetError(ClarCubeError):
    """Invalid even-face set."""


class NotEvenFaceError(FaceSetError):
    """A referenced face is not bounded by an even cycle."""


class UnknownFaceIdError(FaceSetError):
    """A referenced face id does not exist."""


# --- matchings ---

class NotACycleBoundaryError(ClarCubeError):
    """Face boundary is a closed walk but not a cycle."""


class NotAlternatingError(ClarCubeError):
    """Face is not alternating with respect to the given matching."""


# --- resonance graph ---

class NotACycleError(ClarCubeError):
    """Vertex sequence is not a cycle of the resonance graph."""


class UnknownFaceClassError(ClarCubeError):
    """Face id has no edge class in this component."""


class NonBipartiteQuotientError(ClarCubeError):
    """A quotient graph failed to 2-color.

    Possible only when the face set is not a proper subset of the
    face set of the graph; signals a hypothesis violation.
    """


class HypothesisViolatedError(ClarCubeError):
    """The even-face set equals the full face set of the graph."""


# --- corpus and I/O ---

class CorpusError(ClarCubeError):
    """Corpus, generator or file-format problem."""


class EmbSyntaxError(CorpusError):
    """Malformed .emb text."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class EmbSemanticError(CorpusError):
    """Well-formed .emb text describing an invalid embedding."""


class SizeBoundError(CorpusError):
    """Requested instance exceeds the generator size bounds."""


class UnknownInstanceError(CorpusError):
    """No corpus instance with that name."""


class UnknownFaceSetError(CorpusError):
    """No named face set or unparsable face-set selector."""
