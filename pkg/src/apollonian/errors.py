"""Exception hierarchy shared by the library and the command line."""


class ApollonianError(Exception):
    """Base class for all errors raised by this package."""


class SizeGuardError(ApollonianError):
    """A request exceeds a configured size limit (graph build, expansion, determinant)."""


class ConsistencyError(ApollonianError):
    """Two computations that must agree did not; indicates an arithmetic bug."""


class DisconnectedGraphError(ApollonianError):
    """The Laplacian minor is singular because the input graph is disconnected."""
