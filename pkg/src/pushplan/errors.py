"""Exception types raised by scene loading, knowledge parsing and the engine."""


class PushPlanError(Exception):
    """Base class for all toolkit errors."""


class DuplicateIdError(PushPlanError):
    """Two bodies in one world share an id."""


class RobotCountError(PushPlanError):
    """A world must contain exactly one robot body."""


class BadMassError(PushPlanError):
    """Non-fixed body declared with a nonpositive or non-finite mass."""


class BadControlError(PushPlanError):
    """Control force or duration outside the configured bounds."""


class StateMismatchError(PushPlanError):
    """World state ids do not match the world they are loaded into."""


class KnowledgeError(PushPlanError):
    """Malformed knowledge document. Carries the offending field path."""

    def __init__(self, message: str, path: str = ""):
        super().__init__(f"{path}: {message}" if path else message)
        self.path = path


class UnknownActionError(KnowledgeError):
    """Element references an action name missing from the actions set."""


class UnknownObjectError(KnowledgeError):
    """Query names an object id absent from the knowledge base."""


class SceneError(PushPlanError):
    """Malformed scene document. Carries the offending field path."""

    def __init__(self, message: str, path: str = ""):
        super().__init__(f"{path}: {message}" if path else message)
        self.path = path


class UnknownKnowledgeRefError(SceneError):
    """Scene body id has no matching entry in the knowledge document."""


class InvalidStartError(SceneError):
    """Initial scene poses overlap or fall outside the room."""
