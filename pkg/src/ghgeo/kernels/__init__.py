"""Integer kernels with a selectable backend.

The hot loops (distortion scans, exhaustive correspondence search,
triangle inequality sweeps) run on int64 matrices obtained by clearing
denominators. That keeps them exact: every kernel uses only subtraction,
absolute value, comparison and addition of entries, so results are
correct whenever inputs fit comfortably inside int64. Callers check the
2**62 headroom before dispatching and fall back to arbitrary-precision
Python integers otherwise.

Set GHG_BACKEND=numba or GHG_BACKEND=numpy to force a backend; leave it
unset (or "auto") to use numba when importable and numpy otherwise.
"""

from __future__ import annotations

import importlib
import importlib.util
import os

_ENV = "GHG_BACKEND"
_THREADS_ENV = "GHG_THREADS"
_loaded: dict[str, object] = {}

INT_HEADROOM = 2**62


def backend_name() -> str:
    """Resolve the backend choice from the environment."""
    choice = os.environ.get(_ENV, "").strip().lower()
    if choice in ("", "auto"):
        if importlib.util.find_spec("numba") is not None:
            return "numba"
        return "numpy"
    if choice in ("numba", "numpy"):
        return choice
    raise ValueError(f"{_ENV} must be 'numba', 'numpy' or 'auto', got {choice!r}")


def get(name: str | None = None):
    """Return the active backend module (compiled lazily, cached)."""
    if name is None:
        name = backend_name()
    if name not in _loaded:
        _loaded[name] = importlib.import_module(f".{name}_backend", __name__)
    return _loaded[name]


def thread_cap() -> int:
    """Worker cap for table generation, from GHG_THREADS (default 1)."""
    raw = os.environ.get(_THREADS_ENV, "").strip()
    if not raw:
        return 1
    try:
        n = int(raw)
    except ValueError:
        raise ValueError(f"{_THREADS_ENV} must be a positive integer, got {raw!r}") from None
    if n < 1:
        raise ValueError(f"{_THREADS_ENV} must be a positive integer, got {raw!r}")
    return n
