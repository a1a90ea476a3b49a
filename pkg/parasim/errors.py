"""
Errors
======
Exception hierarchy shared by the library and the command-line interface.

The CLI maps UsageError to exit status 1 and every other ParasimError
to exit status 2.
"""


class ParasimError(Exception):
    """Base class for every error raised by parasim."""


class PreconditionError(ParasimError):
    """An operation was called with arguments violating its precondition."""


class IrreparableEntityError(PreconditionError):
    """An entity admits no repair (every literal is in a contradiction)."""

    def __init__(self, entity_id):
        self.entity_id = entity_id
        super().__init__(f"Entity '{entity_id}' is irreparable: every literal is involved in a contradiction")


class KbSyntaxError(ParasimError):
    """Knowledge-base text could not be parsed."""

    def __init__(self, message, line, column):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class DuplicateEntityError(ParasimError):
    """Two entities share the same id."""

    def __init__(self, entity_id, line=None):
        self.entity_id = entity_id
        self.line = line
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"Duplicate entity id '{entity_id}'{where}")


class UnknownEntityError(ParasimError):
    """An entity id was requested that the knowledge base does not contain."""

    def __init__(self, entity_id):
        self.entity_id = entity_id
        super().__init__(f"Unknown entity id '{entity_id}'")


class ConfigError(ParasimError):
    """A configuration value is missing or invalid."""

    def __init__(self, key, message):
        self.key = key
        super().__init__(f"Invalid configuration '{key}': {message}")


class UsageError(ParasimError):
    """Malformed command-line arguments."""


class KbFileError(ParasimError):
    """A knowledge-base file could not be read."""

    def __init__(self, path, reason):
        self.path = path
        super().__init__(f"Cannot read knowledge base {path}: {reason}")
