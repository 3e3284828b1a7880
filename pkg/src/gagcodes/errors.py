"""Shared exception types."""


class ConfigError(ValueError):
    """Malformed or inconsistent construction config."""


class ResourceCapError(RuntimeError):
    """A hard enumeration/size cap was exceeded."""
