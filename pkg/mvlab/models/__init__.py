"""
Immutable domain types shared by the mvlab tasks.
"""
