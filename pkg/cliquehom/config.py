"""
Configuration classes for cliquehom.

Settings are read from the environment when a configuration object is
created, so values loaded from a .env file by the application factory are
honoured. Each run mode has its own class.
"""

import os
from typing import Any, Dict, List


FILLER_POLICIES = ('edge', 'edge-or-vertex')
LOG_LEVELS = ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL')


class Config:
    """Base configuration."""

    TESTING = False
    DEFAULTS = {
        'MAX_DIM_CAP': 25,
        'DENSE_CAP': 14,
        'QUBIT_CAP': 256,
        'SECTOR_CAP': 20000,
        'FILLER_POLICY': 'edge-or-vertex',
        'PLAIN_FILLER_POLICY': 'edge',
        'LOG_LEVEL': 'INFO',
    }

    def __init__(self, **overrides: Any):
        settings = dict(self.DEFAULTS)
        for key in settings:
            value = os.getenv(f'CLIQUEHOM_{key}')
            if value not in (None, '') and not self.TESTING:
                settings[key] = value
        settings.update(overrides)

        self.MAX_DIM_CAP = self._as_int(settings['MAX_DIM_CAP'])
        self.DENSE_CAP = self._as_int(settings['DENSE_CAP'])
        self.QUBIT_CAP = self._as_int(settings['QUBIT_CAP'])
        self.SECTOR_CAP = self._as_int(settings['SECTOR_CAP'])
        self.FILLER_POLICY = str(settings['FILLER_POLICY'])
        self.PLAIN_FILLER_POLICY = str(settings['PLAIN_FILLER_POLICY'])
        self.LOG_LEVEL = str(settings['LOG_LEVEL']).upper()

    @staticmethod
    def _as_int(value: Any) -> int:
        try:
            return int(value)
        except (TypeError, ValueError):
            return -1

    def validate(self) -> List[str]:
        """
        Validate the configuration values.

        Returns:
            List of validation error messages
        """
        errors = []
        for key in ('MAX_DIM_CAP', 'DENSE_CAP', 'QUBIT_CAP', 'SECTOR_CAP'):
            if getattr(self, key) < 1:
                errors.append(f'CLIQUEHOM_{key} must be a positive integer')
        for key in ('FILLER_POLICY', 'PLAIN_FILLER_POLICY'):
            if getattr(self, key) not in FILLER_POLICIES:
                errors.append(f"CLIQUEHOM_{key} must be one of {', '.join(FILLER_POLICIES)}")
        if self.LOG_LEVEL not in LOG_LEVELS:
            errors.append(f'CLIQUEHOM_LOG_LEVEL {self.LOG_LEVEL!r} is not a logging level name')
        return errors

    def to_dict(self) -> Dict[str, Any]:
        return {key: getattr(self, key) for key in self.DEFAULTS}


class DevelopmentConfig(Config):
    """Development configuration."""

    DEFAULTS = dict(Config.DEFAULTS, LOG_LEVEL='DEBUG')


class TestingConfig(Config):
    """Testing configuration; ignores the environment."""

    TESTING = True
    DEFAULTS = dict(Config.DEFAULTS, LOG_LEVEL='WARNING')


class ProductionConfig(Config):
    """Production configuration."""

    DEFAULTS = dict(Config.DEFAULTS, LOG_LEVEL='WARNING')


_active_config = None


def set_current_config(config: Config) -> None:
    """Install the configuration used by services called without explicit caps."""
    global _active_config
    _active_config = config


def current_config() -> Config:
    """Return the active configuration, falling back to environment defaults."""
    if _active_config is None:
        return Config()
    return _active_config
