"""Error types shared across modules."""


class WizardError(Exception):
    """Base class for all service-level errors."""


class ValidationError(WizardError):
    """A request or payload failed validation.

    `field` names the offending field when known, so API responses can
    point at it.
    """

    def __init__(self, message: str, field: str | None = None):
        super().__init__(message)
        self.field = field


class NotFoundError(WizardError):
    """A referenced specification does not exist."""


class CorruptionError(WizardError):
    """Stored data failed an integrity check (checksum, id gap, disorder).

    `event_id` identifies the first bad record when the corruption is
    localized to one.
    """

    def __init__(self, message: str, event_id: int | None = None):
        super().__init__(message)
        self.event_id = event_id


class StorageError(WizardError):
    """A write to durable storage failed; in-memory state was not advanced."""
