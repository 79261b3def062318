"""Output distribution of balanced stack filters.

A balanced filter rests on a PBF ``b(x, y)`` in ``2w`` variables.  Bits
``0..w-1`` of the underlying :class:`Pbf` are the x-block and bits
``w..2w-1`` the y-block.  Per zero ``(x, y)`` of b the exponent tuple is
``(v_pp, v_pm, v_mp, v_mm)`` where ``v_pm`` counts positions with
``x_k = 1, y_k = 0`` and so on.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from math import comb
from typing import NamedTuple

from .pbf import Pbf, Window, mask_bits
from .rows import MultiRow, enumerate_zeros

__all__ = [
    "BalancedPbf",
    "ThresholdQuadruple",
    "BalancedProfile",
    "threshold_probs",
    "fiber_counts",
    "balanced_profile",
    "balanced_eval",
]


@dataclass(frozen=True)
class BalancedPbf:
    x_window: Window
    pbf: Pbf

    def __post_init__(self):
        if self.pbf.window != Window(0, 2 * self.x_window.width - 1):
            raise ValueError("balanced PBF must live on bits 0..2w-1")

    @property
    def w(self) -> int:
        return self.x_window.width

    @classmethod
    def from_stack_filter(cls, pbf: Pbf) -> "BalancedPbf":
        """A plain stack filter seen as a balanced one with fictitious y."""
        w = pbf.w
        shifted = tuple(tuple(p - pbf.window.lo for p in imp) for imp in pbf.implicants)
        return cls(pbf.window, Pbf(Window(0, 2 * w - 1), shifted))


class ThresholdQuadruple(NamedTuple):
    p_pp: object
    p_pm: object
    p_mp: object
    p_mm: object


def threshold_probs(F_t, F_neg_t, t_nonpositive: bool) -> ThresholdQuadruple:
    """The four mirrored-threshold probabilities from ``F(t)`` and ``F(-t)``."""
    for v in (F_t, F_neg_t):
        if not 0 <= v <= 1:
            raise ValueError(f"probability {v} outside [0, 1]")
    if t_nonpositive:
        if F_t > F_neg_t:
            raise ValueError("t <= 0 requires F(t) <= F(-t)")
        return ThresholdQuadruple(F_neg_t - F_t, 1 - F_neg_t, F_t, 0 * F_t)
    if F_neg_t > F_t:
        raise ValueError("t > 0 requires F(-t) <= F(t)")
    return ThresholdQuadruple(0 * F_t, 1 - F_t, F_neg_t, F_t - F_neg_t)


@dataclass
class BalancedProfile:
    """Exponent tuple ``(v_pp, v_pm, v_mp, v_mm)`` -> number of zeros of b."""

    w: int
    counts: dict[tuple[int, int, int, int], int] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def __eq__(self, other):
        if not isinstance(other, BalancedProfile):
            return NotImplemented
        drop = lambda d: {k: v for k, v in d.items() if v}
        return self.w == other.w and drop(self.counts) == drop(other.counts)


# bivariate polynomials in (s, t) as {(deg_s, deg_t): coeff}
def _bmul(a, b):
    out: Counter = Counter()
    for (i, j), c in a.items():
        for (k, l), d in b.items():
            out[i + k, j + l] += c * d
    return {k: v for k, v in out.items() if v}


def _binom2(n_s, n_t):
    return {(i, j): comb(n_s, i) * comb(n_t, j) for i in range(n_s + 1) for j in range(n_t + 1)}


def fiber_counts(row: MultiRow, w: int, x_star: int) -> dict[tuple[int, int], int]:
    """For fixed x-half ``x_star``, count y with ``(x_star, y)`` in ``row``.

    Keys are ``(k, k')``: ones of y where x_star is 1, ones of y where it is 0.
    Empty when ``x_star`` is not extendible within ``row``.
    """
    X = (1 << w) - 1
    if (x_star & row.zeros & X) or (row.ones & X) & ~x_star:
        return {}
    on, off = x_star, X & ~x_star
    y_zeros = row.zeros >> w
    y_ones = row.ones >> w
    y_bubbles = []
    for b in row.bubbles:
        bx, by = b & X, b >> w
        if bx and bx & x_star != bx:
            continue  # x_star already has a zero inside this bubble
        if not by:
            return {}  # bubble entirely in the x-half and all ones
        y_bubbles.append(by)
    used = y_zeros | y_ones
    for b in y_bubbles:
        used |= b
    free = X & ~used
    g = {((y_ones & on).bit_count(), (y_ones & off).bit_count()): 1}
    g = _bmul(g, _binom2((free & on).bit_count(), (free & off).bit_count()))
    for b in y_bubbles:
        ns, nt = (b & on).bit_count(), (b & off).bit_count()
        f = _binom2(ns, nt)
        f[ns, nt] -= 1
        g = _bmul(g, f)
    return g


def _x_members(row: MultiRow, w: int):
    """The extendible x-halves of ``row``."""
    X = (1 << w) - 1
    x_bubbles = tuple(b for b in row.bubbles if not b & ~X)
    xrow = MultiRow(Window(0, w - 1), row.zeros & X, row.ones & X, x_bubbles)
    return xrow.members()


def balanced_profile(bpbf: BalancedPbf) -> BalancedProfile:
    w = bpbf.w
    counts: Counter = Counter()
    for row in enumerate_zeros(bpbf.pbf):
        for x_star in _x_members(row, w):
            ones = x_star.bit_count()
            for (k, kk), c in fiber_counts(row, w, x_star).items():
                counts[k, ones - k, kk, w - ones - kk] += c
    return BalancedProfile(w, dict(sorted(counts.items())))


def balanced_eval(profile: BalancedProfile, q4: ThresholdQuadruple):
    """``F_out(t)`` as the sum of count * p_pp^a p_pm^b p_mp^c p_mm^d."""
    total = 0
    for (a, b, c, d), n in profile.counts.items():
        total += n * q4.p_pp**a * q4.p_pm**b * q4.p_mp**c * q4.p_mm**d
    return total
