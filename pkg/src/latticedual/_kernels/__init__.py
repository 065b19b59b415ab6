"""Hot kernels with a compiled core and a pure-Python fallback.

The Cython extension ``latticedual._kernels.speed`` is used when it was built;
otherwise the equivalent ``pure`` module takes over.  Set ``LATTICEDUAL_PURE=1``
to force the fallback (the test suite uses this to compare both).
"""

import os

from . import pure

if os.environ.get("LATTICEDUAL_PURE"):
    _impl = pure
    BACKEND = "pure"
else:
    try:
        from . import speed as _impl  # type: ignore[attr-defined]

        BACKEND = "speed"
    except ImportError:
        _impl = pure
        BACKEND = "pure"

flood_exterior = _impl.flood_exterior
flood_vacant = _impl.flood_vacant
label_component = _impl.label_component

__all__ = ["flood_exterior", "flood_vacant", "label_component", "BACKEND", "pure"]
