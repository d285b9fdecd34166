"""Exception hierarchy shared by all conicseq modules."""


class ConicseqError(Exception):
    """Base class for every error raised by this package."""


# -- geometry ---------------------------------------------------------------

class DegenerateInput(ConicseqError):
    """The input points do not span a polytope of positive dimension."""


class Unbounded(ConicseqError):
    """The feasible region of an inequality system is unbounded."""


class Empty(ConicseqError):
    """The feasible region of an inequality system is empty."""


# -- face lattices ----------------------------------------------------------

class InconsistentIncidence(ConicseqError):
    """A vertex-facet incidence matrix is not that of a polytope."""


class VertexNotPresent(ConicseqError):
    """The requested vertex is not alive in the complex."""


class NotComparable(ConicseqError):
    """Two elements are not related in the relevant partial order."""


class NotAConeVertex(ConicseqError):
    """The vertex has no unique maximal face among the faces containing it."""


class SizeLimitExceeded(ConicseqError):
    """An exhaustive routine was asked to run beyond its configured bound."""


# -- invariants -------------------------------------------------------------

class NotDeltaConic(ConicseqError):
    """A certificate step has a non-simplex base where simplices are required."""


class NotCubeConic(ConicseqError):
    """A certificate step has a non-cube base where cubes are required."""


class InconsistentWitness(ConicseqError):
    """A certificate does not match the face counts it is paired with."""


# -- builders ---------------------------------------------------------------

class DimensionOutOfRange(ConicseqError):
    """A builder was asked for a dimension outside its supported range."""


class SizeMismatch(ConicseqError):
    """Two permutations act on symbol sets of different sizes."""


# -- documents --------------------------------------------------------------

class SchemaError(ConicseqError):
    """A JSON document violates its schema; `path` locates the offence."""

    def __init__(self, path, message):
        super().__init__(f"{path}: {message}")
        self.path = path
        self.message = message


class ParseError(ConicseqError):
    """A scalar inside a document (typically a rational string) is malformed."""
