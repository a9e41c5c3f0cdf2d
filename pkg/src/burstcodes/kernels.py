"""Kernel backend selection.

The compiled ``_kernels`` extension is used when it imports; otherwise the
pure-Python module with the same functions.  Set ``BURSTCODES_PURE=1`` to
force the fallback.
"""
import os

from . import _kernels_py

BACKEND = "python"
_impl = _kernels_py

if os.environ.get("BURSTCODES_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _compiled  # type: ignore[attr-defined]
    except ImportError:  # extension not built
        pass
    else:
        _impl = _compiled
        BACKEND = "compiled"

DI = _kernels_py.DI
DS = _kernels_py.DS
DS_REV = _kernels_py.DS_REV
DI_FREE = _kernels_py.DI_FREE

burst_outputs = _impl.burst_outputs
preimages = _impl.preimages
neighbourhood = _impl.neighbourhood
power_sums = _impl.power_sums
pair_order = _impl.pair_order
packed_modulus = _impl.packed_modulus
packed_modulus_py = _kernels_py.packed_modulus
