"""
Constants used by mvlab
"""
APPNAME = "mvlab"
APPAUTHOR = "mvlab"

# Rows per reduction chunk.  Every kernel sums chunk partials in this
# fixed order, whatever the number of worker threads.
CHUNK_SIZE = 1024

SAMPLERS = ("all-ones", "single-point", "random-phases", "random-sparse")
