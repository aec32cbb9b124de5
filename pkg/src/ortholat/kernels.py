"""Backend selection for the enumeration kernels.

The compiled extension is preferred when present; the pure-Python twin is
selected otherwise (or when ORTHOLAT_PURE is set).  Both implement the same
search with the same float operations, so results are identical either way.
"""

import os

from . import _enumpy

_backend_name = "python"
_impl = _enumpy

if not os.environ.get("ORTHOLAT_PURE"):
    try:
        from . import _enumcy as _impl_compiled

        _impl = _impl_compiled
        _backend_name = "compiled"
    except ImportError:
        pass


def backend() -> str:
    """'compiled' when the extension kernel is active, else 'python'."""
    return _backend_name


def svp_enum(mu, rdiag, radius_sq, max_nodes=0):
    return _impl.svp_enum(mu, rdiag, radius_sq, max_nodes)


def svp_enum_collect(mu, rdiag, radius_sq, limit, max_nodes=0):
    return _impl.svp_enum_collect(mu, rdiag, radius_sq, limit, max_nodes)


def torus_min_enum(mu, rdiag, rows, d2_init, zero_eps=1e-9, max_nodes=0):
    return _impl.torus_min_enum(mu, rdiag, rows, d2_init, zero_eps, max_nodes)
