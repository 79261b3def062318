"""Joint output distribution of two stack filters on the same window.

``A[i][j]`` counts pairs ``x >= y`` with ``b1(x) = b2(y) = 0`` that have
``i`` common zeros and ``j`` common ones.  With ``p = F(s) <= pi = F(t)``::

    JD(s, t) = sum_ij A[i][j] p^i (pi - p)^(w-i-j) (1 - pi)^j
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import poly
from .distribution import row_weight_polynomial
from .pbf import Pbf, WindowMismatch
from .rows import MultiRow, enumerate_from, enumerate_zeros

__all__ = [
    "JointMatrix",
    "downward_closure",
    "restrict_below",
    "below_counts",
    "row_joint_counts",
    "joint_profile",
    "joint_eval",
]


@dataclass(frozen=True)
class JointMatrix:
    w: int
    A: tuple[tuple[int, ...], ...]
    # matrix of the pair taken in the other order, used when p > pi
    swapped: Optional["JointMatrix"] = None

    @property
    def total(self) -> int:
        return sum(map(sum, self.A))

    def __getitem__(self, ij):
        i, j = ij
        return self.A[i][j]


def downward_closure(row: MultiRow) -> MultiRow:
    """Row of all y lying below some member of ``row``: ones become free."""
    return MultiRow(row.window, row.zeros, 0, row.bubbles)


def restrict_below(row: MultiRow, x: int) -> Optional[MultiRow]:
    """``{y in row : y <= x}`` as a row, or None when empty."""
    off = row.full & ~x
    if row.ones & off:
        return None
    # a bubble touching a forced zero is already satisfied
    bubbles = tuple(b for b in row.bubbles if not b & off)
    return MultiRow(row.window, row.zeros | off, row.ones, bubbles)


def below_counts(row: MultiRow, x: int) -> dict[tuple[int, int], int]:
    """Counts of ``y in row, y <= x`` keyed by (common zeros, common ones)."""
    sub = restrict_below(row, x)
    if sub is None:
        return {}
    i = (row.full & ~x).bit_count()
    return {(i, j): c for j, c in enumerate(row_weight_polynomial(sub)) if c}


def row_joint_counts(row: MultiRow, b2: Pbf) -> list[list[int]]:
    """Contribution of one zero-row of b1 to the A matrix.

    The downward closure of ``row`` is restricted to zeros of ``b2`` by the
    row engine; each x in ``row`` then counts the y below it row by row.
    """
    w = row.w
    A = [[0] * (w + 1) for _ in range(w + 1)]
    rhos = enumerate_from(downward_closure(row), b2.masks).rows
    if not rhos:
        return A
    for x in row.members():
        i = (row.full & ~x).bit_count()
        for rho in rhos:
            sub = restrict_below(rho, x)
            if sub is not None:
                poly.add_into(A[i], row_weight_polynomial(sub))
    return A


def _matrix(b1: Pbf, b2: Pbf) -> tuple[tuple[int, ...], ...]:
    w = b1.w
    A = [[0] * (w + 1) for _ in range(w + 1)]
    for r in enumerate_zeros(b1):
        for acc, part in zip(A, row_joint_counts(r, b2)):
            for j, c in enumerate(part):
                acc[j] += c
    return tuple(map(tuple, A))


def joint_profile(b1: Pbf, b2: Pbf, *, with_swapped: bool = True) -> JointMatrix:
    if b1.window != b2.window:
        raise WindowMismatch(f"windows differ: {b1.window} vs {b2.window}")
    swapped = JointMatrix(b1.w, _matrix(b2, b1)) if with_swapped else None
    return JointMatrix(b1.w, _matrix(b1, b2), swapped)


def joint_eval(jm: JointMatrix, p, pi):
    """``Prob(S out <= s and T out <= t)`` with ``p = F(s)``, ``pi = F(t)``."""
    if p > pi:
        if jm.swapped is None:
            raise ValueError("p > pi needs the matrix of the swapped pair")
        return joint_eval(jm.swapped, pi, p)
    w = jm.w
    if len(jm.A) != w + 1 or any(len(row) != w + 1 for row in jm.A):
        raise ValueError("matrix shape does not match window width")
    mid, top = pi - p, 1 - pi
    total = 0 * p
    for i, row in enumerate(jm.A):
        for j, a in enumerate(row):
            if a:
                total += a * p**i * mid ** (w - i - j) * top**j
    return total
