"""Core module for molkit.

This module contains constants, exceptions and the report model shared by
every other package.
"""
