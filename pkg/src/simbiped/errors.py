"""Exception types shared across the package."""


class ReachError(ValueError):
    """A kinematic target lies outside the leg workspace."""


class GeometryError(ValueError):
    """Robot geometry makes the requested computation impossible."""


class DegenerateOrbitError(ValueError):
    """Orbital energy too close to zero to define a trajectory conic."""


class ConfigError(ValueError):
    """Malformed scenario configuration; carries the offending key."""

    def __init__(self, key, message):
        super().__init__(f"config key '{key}': {message}")
        self.key = key


class InstabilityError(RuntimeError):
    """The physics solver diverged (velocity blow-up); run aborted."""
