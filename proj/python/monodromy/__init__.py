"""Braid monodromy toolkit.

Words in braid groups, the braid action on free groups, braid monodromy
factorizations with their Hurwitz orbits, Zariski-van Kampen presentations,
and a numerical tracker for local braids of plane-curve germs.
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__ as _core_doc

__all__ = [name for name in dir() if not name.startswith("_")]
__doc__ = (__doc__ or "") + "\n" + (_core_doc or "")
