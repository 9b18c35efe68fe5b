"""
Unit test package initialization.
"""
