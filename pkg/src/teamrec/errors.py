"""Exception types shared across the pipeline."""


class TeamRecError(Exception):
    """Base class for all errors raised by teamrec."""


class AuthorNotFound(TeamRecError, LookupError):
    def __init__(self, name):
        super().__init__(f"author not found: {name!r}")
        self.name = name


class IndexEmpty(TeamRecError, ValueError):
    """No document in the corpus produced a single token."""


class EmptyEdgeSet(TeamRecError, ValueError):
    pass


class GraphShapeMismatch(TeamRecError, ValueError):
    pass


class SameNode(TeamRecError, ValueError):
    def __init__(self, name):
        super().__init__(f"source and target are the same author: {name!r}")
        self.name = name


class InvalidRequest(TeamRecError, ValueError):
    pass


class SnapshotError(TeamRecError, ValueError):
    pass
