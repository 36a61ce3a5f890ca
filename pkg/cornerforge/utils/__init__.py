"""
Utility functions and classes for cornerforge.
"""

from .config import Config

__all__ = ['Config']
