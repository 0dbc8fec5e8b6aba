"""Oracle kernel backend selection.

The compiled Cython backend is preferred when its extension module built;
otherwise the pure-Python twin takes over transparently.  Set the
environment variable ``NCFKIT_PURE=1`` before import to force the pure
backend (used by the benchmark and the backend-equivalence tests).
"""

import os

if os.environ.get("NCFKIT_PURE"):
    from ncfkit._kernels import pure as backend
else:
    try:
        from ncfkit._kernels import fastcore as backend  # type: ignore
    except ImportError:
        from ncfkit._kernels import pure as backend


def backend_name() -> str:
    """Name of the active kernel backend: "compiled" or "pure"."""
    return backend.BACKEND_NAME
