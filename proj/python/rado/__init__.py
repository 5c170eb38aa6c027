"""Exact partition-regularity toolkit.

Decides regularity and distinct-regularity of linear equations over the
positive integers, computes forcing numbers (Schur- and van der Waerden-style)
with independently verifiable avoider certificates, builds signature colorings
of sparse rational vectors, and enumerates field-operation closures of finite
rational sets. All arithmetic is exact.
"""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
