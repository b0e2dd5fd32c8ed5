"""Exception types shared across the package.

Every error carries a short machine-readable ``code`` used by the CLI.
"""


class CubicyError(Exception):
    code = "error"


class IncompatibleTowers(CubicyError):
    code = "incompatible_towers"


class TowerDepthExceeded(CubicyError):
    code = "tower_depth_exceeded"


class ExtensionUnavailable(CubicyError):
    """A root needed by the computation is not reachable in a quadratic tower."""

    code = "extension_unavailable"


class DegreeMismatch(CubicyError):
    code = "degree_mismatch"


class PreconditionViolated(CubicyError):
    code = "precondition_violated"


class SymmetricPotential(PreconditionViolated):
    code = "symmetric_potential"


class NotOnE(PreconditionViolated):
    code = "not_on_point_scheme"


class AmbiguousThirdPoint(CubicyError):
    code = "ambiguous_third_point"


class ParseError(CubicyError):
    code = "parse_error"

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class NonHomogeneous(ParseError):
    code = "non_homogeneous"
