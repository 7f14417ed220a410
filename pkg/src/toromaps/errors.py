"""Exception hierarchy.

Every error raised on purpose by the library derives from :class:`MapError`,
which the CLI maps to exit status 1.
"""


class MapError(ValueError):
    """Input fails a structural or class predicate."""


class NotInvolution(MapError):
    pass


class NotPermutation(MapError):
    pass


class NotConnected(MapError):
    pass


class BadColoring(MapError):
    pass


class WrongGenus(MapError):
    pass


class NotQuadrangulation(MapError):
    pass


class NotBipartite(MapError):
    pass


class NotNullHomologous(MapError):
    pass


class NotUnicellular(MapError):
    pass


class NotPrecubic(MapError):
    pass


class NotACycle(MapError):
    pass


class NotBalanced(MapError):
    pass


class NoPattern(MapError):
    pass


class NotInClass(MapError):
    """Generic class-membership failure; ``reason`` names the violated condition."""

    def __init__(self, family, reason):
        super().__init__(f"not in {family}: {reason}")
        self.family = family
        self.reason = reason


class DemandMismatch(MapError):
    pass


class NoProgress(RuntimeError):
    """Rebalancing found no improving cycle.  Never expected on valid input."""


class StepBoundExceeded(RuntimeError):
    pass


class NotSQuad(MapError):
    pass


class ClockwiseFace(MapError):
    pass


class NotRightBiorientation(MapError):
    pass


class NotPatchable(RuntimeError):
    pass


class CapExceeded(MapError):
    pass


class TmapFormatError(MapError):
    pass


class NotInT(NotInClass):
    def __init__(self, reason):
        super().__init__("T", reason)


class NotInT3(NotInClass):
    def __init__(self, reason):
        super().__init__("T3", reason)


class ClosedFormMismatch(RuntimeError):
    """Two computations of the same series disagree.  Never expected."""
