"""Exception types shared across the engine."""


class EngineError(Exception):
    """Base class for all engine errors."""


# --- catalogue ---

class EmptyDocument(EngineError):
    """Document content is empty after trimming."""


class UnknownDocument(EngineError):
    """No document with the given id (or it is not eligible in this context)."""


class NotPermitted(EngineError):
    """The acting party is not allowed to perform this catalogue operation."""


# --- provisioning ---

class UnknownTool(EngineError):
    """Tool name is not in the global tool registry."""


# --- agent backends ---

class ScriptExhausted(EngineError):
    """A scripted role queue was consumed past its end."""


class BackendUnreachable(EngineError):
    """The HTTP agent backend could not be reached."""


class MalformedReply(EngineError):
    """A backend reply did not parse into a known agent action."""


class ScenarioParseError(EngineError):
    """A scenario script file could not be parsed."""


# --- workflow ---

class EmptyRemit(EngineError):
    """Project remit is empty."""


class UnknownProject(EngineError):
    """No project with the given id."""


class DownstreamClarification(EngineError):
    """A role other than Concierge requested user clarification."""


class ProtocolViolation(EngineError):
    """A role emitted an action type the workflow does not accept from it."""


class AlreadyTerminal(EngineError):
    """Operation requires an Active (or paused) project but it has terminated."""


class UnknownTicket(EngineError):
    """No clarification ticket with the given id."""


class TicketAlreadyAnswered(EngineError):
    """The clarification ticket was already answered."""


# --- compression ---

class CompressionIneffective(EngineError):
    """A compression summary did not reduce the token estimate."""


class BudgetExhausted(EngineError):
    """Project token spend reached its budget."""


# --- metrics ---

class NoVerdicts(EngineError):
    """The event log contains no verdict events."""


class EmptyTrace(EngineError):
    """A verdict list for categorisation was empty."""


class InsufficientData(EngineError):
    """No score trace qualifies for improvement statistics."""
