"""
Command-line front end: argument parsing and command handlers.
"""

from .commands import CommandHandler
from .main import main, build_parser

__all__ = ['CommandHandler', 'main', 'build_parser']
