"""Exception types shared across the package."""


class MpcError(Exception):
    """Base class for all package errors."""


class ParseError(MpcError):
    """Malformed input document or polynomial text."""


class VersionError(ParseError):
    """Unknown schema version in an input document."""


class InvalidParams(MpcError):
    """Bad parameters passed to a space generator."""


class MissingSkeleton(MpcError):
    """Wall derivation requested but the space has no edges and no override."""


class UnsupportedRank(MpcError):
    """Chamber enumeration asked for a torus rank it does not handle."""


class SingularValue(MpcError):
    """The queried point lies on a wall of the moment polytope."""


# A reduction point sitting on a wall and a query point sitting on a wall
# are the same situation seen from two entry points.
SingularPoint = SingularValue


class OutsidePolytope(MpcError):
    """The queried point lies outside the moment polytope."""


class DegenerateXi(MpcError):
    """The chosen direction pairs to zero with some weight."""


class ZeroExponentCoefficient(MpcError):
    """A residue step hit an exponent with zero active coefficient but live poles."""


class DegenerateConfiguration(MpcError):
    """A pole substitution annihilated another denominator; reseed the frame."""


class GenericityFailure(MpcError):
    """No generic coordinate frame found within the retry budget."""


class NotGKM(MpcError):
    """Operation requires validated GKM data and validation failed."""


class NoSolution(MpcError):
    """No class satisfies the requested restriction conditions."""


class SameChamber(MpcError):
    """Two points expected in distinct chambers share one."""


class ConstructionFailure(MpcError):
    """The separating-class search exhausted its budget without a certificate."""


class NoWall(MpcError):
    """The segment between the two points crosses no wall."""


class MultipleWalls(MpcError):
    """The segment between the two points crosses more than one wall."""


class ZeroSWeight(MpcError):
    """A weight declared normal to a wall stratum has zero circle pairing."""


class RayDegeneracy(MpcError):
    """Every seeded ray hit a codimension-two stratum; no generic ray found."""
