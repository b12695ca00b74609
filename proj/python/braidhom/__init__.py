"""Braid groups, their embeddings into mapping class groups, and homology.

Thin re-export of the compiled extension. The heavy lifting lives in C++;
see the project README for the full catalogue of operations.
"""

from braidhom._core import *  # noqa: F401,F403
from braidhom._core import __version__  # noqa: F401
