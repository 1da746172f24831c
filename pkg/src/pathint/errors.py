"""Exception hierarchy shared by all pathint modules."""


class PathintError(Exception):
    """Base class for all domain errors raised by this package."""


class GraphError(PathintError):
    """Invalid digraph data: self-loop, duplicate arrow, unknown endpoint."""


class MapError(PathintError):
    """A vertex mapping is not a digraph map."""


class PathError(PathintError):
    """Invalid path data or an illegal path operation."""


class FormError(PathintError):
    """Invalid form data (wrong host, unknown arrow or vertex)."""


class PairingError(PathintError):
    """Arguments of a bilinear pairing do not share host or base."""
