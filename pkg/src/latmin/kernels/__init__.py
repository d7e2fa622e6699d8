"""Hot inner loops, compiled with numba when available.

Set ``LATMIN_DISABLE_NUMBA=1`` to force the pure-numpy path. Both paths
expose ``eta_logsum``, ``grad_series`` and ``green_logsum`` with identical
semantics; ``BACKEND`` names the one in use.
"""

import os

from . import _numpy

_disabled = os.environ.get("LATMIN_DISABLE_NUMBA", "").strip().lower() in {"1", "true", "yes"}

if _disabled:
    _impl = _numpy
    BACKEND = "numpy"
else:
    try:
        from . import _numba as _impl

        BACKEND = "numba"
    except ImportError:  # pragma: no cover - numba is a declared dependency
        _impl = _numpy
        BACKEND = "numpy"

eta_logsum = _impl.eta_logsum
grad_series = _impl.grad_series
green_logsum = _impl.green_logsum

__all__ = ["BACKEND", "eta_logsum", "grad_series", "green_logsum"]
