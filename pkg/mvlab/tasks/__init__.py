"""
The operations of mvlab, grouped by area.
"""
