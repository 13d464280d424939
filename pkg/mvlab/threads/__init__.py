"""
This package contains functionality for managing threads.
"""
