"""
tests/commands/__init__.py
"""
