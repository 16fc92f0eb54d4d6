from .auto import configuration
from .base_config import BaseConfig
from .settings import Settings

__all__ = ["BaseConfig", "Settings", "configuration"]
