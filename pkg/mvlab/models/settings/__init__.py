"""
mvlab/models/settings/__init__.py
"""
from .model import Settings  # pylint: disable=unused-import
