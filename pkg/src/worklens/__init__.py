"""worklens: pooled worker complaints, LLM-organized problem categories, collaborative solutions."""

from .config import Config, ProviderConfig
from .service import Service

__version__ = "0.1.0"

__all__ = ["Config", "ProviderConfig", "Service", "__version__"]
