"""
Integration test package initialization.
"""
