"""Exception hierarchy for the toolkit.

Two broad groups matter to callers:

* ``GraphInputError`` and ``ParseError`` mean the input data itself is bad
  (malformed file, self-loop, unknown family name).
* ``MathGuardError`` means the data is fine but a mathematical precondition
  of the requested computation is violated (irregular graph handed to a
  closed-form path, disconnected graph handed to a random-walk invariant).
  The CLI maps this group to exit code 1 and everything input-shaped to 2.
"""


class CentralJoinsError(Exception):
    """Base class for all package-specific errors."""


class GraphInputError(CentralJoinsError, ValueError):
    """Invalid data while constructing a graph."""


class SelfLoopError(GraphInputError):
    """An edge joins a vertex to itself."""


class DuplicateEdgeError(GraphInputError):
    """The same unordered pair appears twice in an edge list."""


class VertexOutOfRangeError(GraphInputError):
    """An edge endpoint is negative or >= the vertex count."""


class UnknownFamilyError(GraphInputError):
    """Family name not recognised by :func:`centraljoins.graphs.family`."""


class InvalidParameterError(GraphInputError):
    """Family parameter outside its valid range (e.g. cycle(2))."""


class MathGuardError(CentralJoinsError):
    """A mathematical precondition of the requested operation is violated."""


class NotRegularError(MathGuardError):
    """Graph is not regular; carries the degree multiset for diagnostics."""

    def __init__(self, message, degree_multiset=()):
        super().__init__(message)
        self.degree_multiset = tuple(degree_multiset)


class ZeroRegularityError(MathGuardError):
    """Closed-form path requires regularity degree >= 1."""


class TrivialDenominatorError(MathGuardError):
    """Closed-form denominators vanish (single-vertex graph)."""


class NegativeMultiplicityError(MathGuardError):
    """Closed-form factorization would assign a negative multiplicity."""


class IsolatedVertexError(MathGuardError):
    """Normalized Laplacian is undefined for degree-0 vertices."""


class DisconnectedGraphError(MathGuardError):
    """Operation requires a connected graph (irreducible random walk)."""


class NotCospectralInputError(MathGuardError):
    """Construction requires cospectral input pairs and got different spectra."""


class NoConvergenceError(CentralJoinsError):
    """Eigenvalue iteration failed to converge (defect for symmetric input)."""


class ZeroPolynomialError(CentralJoinsError, ValueError):
    """The zero polynomial has no well-defined degree or roots."""


class ParseError(CentralJoinsError, ValueError):
    """A graph file could not be parsed; carries a line number when known."""

    def __init__(self, message, line=None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class MalformedGraph6Error(ParseError):
    """Byte outside the printable graph6 range or truncated bit stream."""


class UnsupportedSizeError(ParseError):
    """graph6 input uses the multi-byte size encoding (n > 62)."""
