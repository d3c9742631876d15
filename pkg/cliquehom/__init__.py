"""
cliquehom: exact clique homology and circuit-to-graph reductions.

The package computes exact simplicial homology of clique and independence
complexes and builds graphs whose independence-complex homology encodes the
satisfying space of quantum k-SAT instances derived from verification
circuits over {CNOT, U_Pyth}.
"""

import importlib
import logging
import os
import sys
from dataclasses import dataclass
from typing import Optional

from dotenv import load_dotenv

from cliquehom.config import Config, set_current_config
from cliquehom.exceptions import ConfigurationError

__version__ = '0.4.0'

logger = logging.getLogger(__name__)


@dataclass
class Toolkit:
    """Resolved runtime settings shared by the services and the CLI."""
    config: Config
    config_name: str
    logger: logging.Logger


def create_app(config_name: Optional[str] = None, **overrides) -> Toolkit:
    """
    Application factory.

    Args:
        config_name: Configuration name ('development', 'production', 'testing')
        **overrides: Explicit setting overrides (e.g. from CLI flags)

    Returns:
        Toolkit with the loaded configuration and a configured logger
    """
    load_dotenv()

    if config_name is None:
        config_name = os.getenv('CLIQUEHOM_ENV', 'development')

    module = importlib.import_module('cliquehom.config')
    config_class = getattr(module, f'{config_name.title()}Config', None)
    if config_class is None:
        raise ConfigurationError(f"Unknown configuration '{config_name}'")

    config = config_class(**overrides)
    errors = config.validate()
    if errors:
        raise ConfigurationError('; '.join(errors))

    set_current_config(config)
    configure_logging(config.LOG_LEVEL)
    logger.debug(f"Loaded {config_class.__name__}: {config.to_dict()}")
    return Toolkit(config=config, config_name=config_name, logger=logging.getLogger('cliquehom'))


def configure_logging(level: str) -> None:
    """Attach a single stderr handler to the package logger."""
    root = logging.getLogger('cliquehom')
    root.setLevel(level)
    if not any(getattr(h, '_cliquehom', False) for h in root.handlers):
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter('%(asctime)s %(levelname)s %(name)s: %(message)s'))
        handler._cliquehom = True
        root.addHandler(handler)
