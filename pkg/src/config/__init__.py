"""
Configuration module for molkit.

This package handles configuration management for molkit.
"""

from .settings import Settings

__all__ = ['Settings']
