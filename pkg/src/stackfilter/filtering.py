"""Running a stack filter over a finite signal."""

from __future__ import annotations

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from .pbf import Pbf

__all__ = ["apply", "BOUNDARY_MODES"]

# boundary name -> numpy.pad mode
BOUNDARY_MODES = {"replicate": "edge", "mirror": "symmetric", "zero": "constant"}


def apply(pbf: Pbf, signal, boundary: str = "replicate") -> np.ndarray:
    """Output sample k is ``b`` (max of mins) on the window centered at k.

    Samples outside the signal come from ``boundary``: ``replicate`` repeats
    the edge value, ``mirror`` reflects the signal, ``zero`` pads with 0.
    """
    z = np.asarray(signal, dtype=float)
    if z.ndim != 1 or z.size == 0:
        raise ValueError("signal must be a non-empty 1-d sequence")
    try:
        mode = BOUNDARY_MODES[boundary]
    except KeyError:
        raise ValueError(f"unknown boundary mode {boundary!r}") from None
    lo, hi = pbf.window.lo, pbf.window.hi
    left, right = max(0, -lo), max(0, hi)
    padded = np.pad(z, (left, right), mode=mode)
    # output k reads padded[k + left + lo .. k + left + hi]
    start = left + lo
    windows = sliding_window_view(padded[start:], pbf.w)[: z.size]
    if pbf.is_one:
        return np.full(z.size, np.inf)
    out = np.full(z.size, -np.inf)
    for imp in pbf.implicants:
        cols = [p - lo for p in imp]
        out = np.maximum(out, windows[:, cols].min(axis=1))
    return out
