"""Kernel lane selection.

The hot integer-only loops (symmetric-group characters, partition
enumeration, PBW word rewriting) exist twice: a Cython extension
(``_speedups``) and a pure-Python twin (``_purekernels``).  The compiled lane
is used when it importable; set WREATHGROTH_PURE=1 to force the fallback.
``benchmarks/bench_kernels.py`` compares the two.
"""

import os

if os.environ.get("WREATHGROTH_PURE"):
    from . import _purekernels as impl
else:
    try:
        from . import _speedups as impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _purekernels as impl

character = impl.character
partitions_of = impl.partitions_of
normalize_product = impl.normalize_product


def backend() -> str:
    """Name of the active kernel lane: 'compiled' or 'pure'."""
    return impl.BACKEND
