"""Row-reduction backend selector.

Imports the compiled kernel when the extension was built, otherwise
falls back to the pure-Python twin.  ``BACKEND`` records the choice so
tests and benchmarks can report it.
"""

from __future__ import annotations

try:
    from orthoql._kernel import rref_gauss

    BACKEND = "compiled"
except ImportError:  # pragma: no cover - depends on the build environment
    from orthoql._kernel_py import rref_gauss

    BACKEND = "pure-python"

__all__ = ["rref_gauss", "BACKEND"]
