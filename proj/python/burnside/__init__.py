"""Exact P-local Burnside ring splittings and norm descent.

The heavy lifting happens in the C++ extension ``burnside._core``; this
package re-exports its public surface.
"""

from ._core import Session, __version__

__all__ = ["Session", "__version__"]
