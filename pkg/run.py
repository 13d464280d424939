"""
Runner script for testing CLI while developing
"""
from mvlab.client import run

run()
