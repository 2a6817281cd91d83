"""Exception types shared across the package."""


class NuRegError(Exception):
    """Base class for all package-specific errors."""


class LoopEdge(NuRegError):
    """An edge joins a vertex to itself."""


class VertexOutOfRange(NuRegError):
    """A vertex label is not part of the graph."""


class NotAPath(NuRegError):
    """A vertex sequence is not a path of the graph."""


class NotBlockGraph(NuRegError):
    """An operation restricted to block graphs was called on something else."""


class NoCutVertex(NuRegError):
    """The graph has no cut vertex."""


class NotInduced(NuRegError):
    """A family member is not an induced path.

    Carries the 1-based index of the offending path.
    """

    def __init__(self, index, message=None):
        self.index = index
        super().__init__(message or f"path {index} is not an induced path")


class NotDisjoint(NuRegError):
    """Two family members share a vertex."""

    def __init__(self, i, j, message=None):
        self.i = i
        self.j = j
        super().__init__(message or f"paths {i} and {j} share a vertex")


class BadOrientation(NuRegError):
    """Declared endpoints of an oriented path do not match its vertex sequence."""


class NotDoip(NuRegError):
    """A family required to be a DOIP family is not one."""


class UnitIdeal(NuRegError):
    """The monomial ideal contains 1."""


class TooLarge(NuRegError):
    """Instance exceeds the exact-computation size cap."""


class DegreeNotOne(NuRegError):
    """A gluing operation expected a degree-one vertex."""


class NeighborDegreeTooSmall(NuRegError):
    """A gluing operation expected the whisker neighbors to have larger degree."""


class SpecInvariantViolated(NuRegError):
    """A family-construction specification violates its invariants."""


class ConfigError(NuRegError):
    """Bad verification scope, corpus, or limits."""


class TheoremViolation(NuRegError):
    """A verified statement failed on a concrete instance (harness alarm)."""
