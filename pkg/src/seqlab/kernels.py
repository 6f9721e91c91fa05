"""Backend selection for the hot loops.

The compiled extension ``seqlab._ckernels`` is used when it imports;
otherwise the pure-Python module with identical signatures. Setting
``SEQLAB_PURE_PYTHON=1`` forces the fallback.
"""
import os

from . import _pykernels

if os.environ.get("SEQLAB_PURE_PYTHON", "") not in ("", "0"):
    _impl = _pykernels
    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl
    except ImportError:  # extension not built
        _impl = _pykernels
        BACKEND = "python"
    else:
        BACKEND = "compiled"

curling_number = _impl.curling_number
extend_until_one = _impl.extend_until_one
best_tail_block = _impl.best_tail_block
gijswijt = _impl.gijswijt
held_karp = _impl.held_karp
tour_lengths = _impl.tour_lengths
persistence_scan = _impl.persistence_scan
powertrain_fixed_scan = _impl.powertrain_fixed_scan

__all__ = [
    "BACKEND",
    "best_tail_block",
    "curling_number",
    "extend_until_one",
    "gijswijt",
    "held_karp",
    "persistence_scan",
    "powertrain_fixed_scan",
    "tour_lengths",
]
