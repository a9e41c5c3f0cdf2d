"""Codes correcting two bursts of deletion-insertion or deletion-substitution errors."""
from .kernels import BACKEND

__version__ = "0.1.0"
__all__ = ["BACKEND", "__version__"]
