"""{0,1,2,n}-valued rows and the stack-filter n-algorithm.

A row fixes some coordinates to 0 or 1, leaves others free (``2``) and
groups further coordinates into *bubbles*: a bubble admits every pattern on
its positions except all ones.  The zeros of a PBF are produced as a
disjoint union of such rows by imposing one noncover constraint after the
other on a LIFO working stack.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import product
from typing import Iterator, Sequence

from .pbf import Pbf, Window, WindowMismatch, mask_bits

__all__ = [
    "MultiRow",
    "RowSet",
    "EngineStats",
    "row_contains",
    "row_cardinality",
    "satisfies",
    "impose",
    "enumerate_zeros",
    "enumerate_from",
]

_CELL = re.compile(r"^(0|1|2|n(\d*))$")


@dataclass(frozen=True)
class MultiRow:
    """One {0,1,2,n}-valued row; masks are over bits ``0..w-1`` of ``window``."""

    window: Window
    zeros: int = 0
    ones: int = 0
    bubbles: tuple[int, ...] = ()

    @classmethod
    def free(cls, window: Window) -> "MultiRow":
        return cls(window)

    @classmethod
    def parse(cls, text: str | Sequence[str], window: Window | None = None) -> "MultiRow":
        """Build a row from cells like ``"2 n1 n1 0 1 n2 n2"``.

        A bare ``n`` belongs to one shared unlabeled bubble.
        """
        cells = text.split() if isinstance(text, str) else list(text)
        if window is None:
            window = Window(0, len(cells) - 1)
        if len(cells) != window.width:
            raise WindowMismatch(f"{len(cells)} cells for window width {window.width}")
        zeros = ones = 0
        groups: dict[str, int] = {}
        for k, cell in enumerate(cells):
            m = _CELL.match(str(cell))
            if not m:
                raise ValueError(f"bad cell {cell!r}")
            if cell == "0":
                zeros |= 1 << k
            elif cell == "1":
                ones |= 1 << k
            elif cell.startswith("n"):
                groups[cell] = groups.get(cell, 0) | (1 << k)
        bubbles = []
        for b in groups.values():
            if b.bit_count() == 1:
                zeros |= b
            else:
                bubbles.append(b)
        return cls(window, zeros, ones, tuple(bubbles))

    @property
    def w(self) -> int:
        return self.window.width

    @property
    def full(self) -> int:
        return (1 << self.w) - 1

    @property
    def bubble_union(self) -> int:
        u = 0
        for b in self.bubbles:
            u |= b
        return u

    @property
    def free_mask(self) -> int:
        return self.full & ~(self.zeros | self.ones | self.bubble_union)

    def cells(self) -> list[str]:
        out = ["2"] * self.w
        for k in mask_bits(self.zeros):
            out[k] = "0"
        for k in mask_bits(self.ones):
            out[k] = "1"
        for label, b in enumerate(self.bubbles, start=1):
            for k in mask_bits(b):
                out[k] = f"n{label}"
        return out

    def __str__(self) -> str:
        return " ".join(self.cells())

    def check(self) -> None:
        """Raise if the normal-form invariants are violated."""
        seen = self.zeros
        if self.zeros & self.ones:
            raise AssertionError("cell both 0 and 1")
        seen |= self.ones
        for b in self.bubbles:
            if b.bit_count() < 2:
                raise AssertionError("bubble of size < 2")
            if b & seen:
                raise AssertionError("bubble overlaps a fixed cell or another bubble")
            seen |= b
        if seen & ~self.full:
            raise AssertionError("cell outside window")

    def contains_mask(self, x: int) -> bool:
        if x & self.zeros or (x & self.ones) != self.ones:
            return False
        return all(x & b != b for b in self.bubbles)

    def members(self) -> Iterator[int]:
        """Every bitstring of the row as a mask (free cells vary fastest last)."""
        free = [1 << k for k in mask_bits(self.free_mask)]
        bubble_patterns = []
        for b in self.bubbles:
            bits = [1 << k for k in mask_bits(b)]
            pats = []
            for choice in product((0, 1), repeat=len(bits)):
                m = sum(bit for bit, c in zip(bits, choice) if c)
                if m != b:
                    pats.append(m)
            bubble_patterns.append(pats)
        for pats in product(*bubble_patterns):
            base = self.ones | sum(pats)
            for choice in product((0, 1), repeat=len(free)):
                yield base | sum(bit for bit, c in zip(free, choice) if c)

    def same_cover(self, other: "MultiRow") -> bool:
        """Equality as sets of bitstrings (bubble labels and order ignored)."""
        return (
            self.window == other.window
            and self.zeros == other.zeros
            and self.ones == other.ones
            and set(self.bubbles) == set(other.bubbles)
        )


def _as_mask(window: Window, x: Sequence[int]) -> int:
    if len(x) != window.width:
        raise WindowMismatch(f"bitstring of length {len(x)} for window width {window.width}")
    return sum(1 << k for k, bit in enumerate(x) if bit)


def row_contains(row: MultiRow, x: Sequence[int]) -> bool:
    return row.contains_mask(_as_mask(row.window, x))


def row_cardinality(row: MultiRow) -> int:
    n = 1 << row.free_mask.bit_count()
    for b in row.bubbles:
        n *= (1 << b.bit_count()) - 1
    return n


def _implicant_mask(row: MultiRow, a_star) -> int:
    if isinstance(a_star, int):
        return a_star
    lo = row.window.lo
    return sum(1 << (p - lo) for p in a_star)


def _satisfied(zeros: int, bubbles: tuple[int, ...], a: int) -> bool:
    if a & zeros:
        return True
    for b in bubbles:
        if b & a == b:
            return True
    return False


def satisfies(row: MultiRow, a_star) -> bool:
    """True iff no member of ``row`` covers ``a_star``.

    ``a_star`` is a collection of window positions or a bitmask.
    """
    return _satisfied(row.zeros, row.bubbles, _implicant_mask(row, a_star))


def _impose(zeros: int, ones: int, bubbles: tuple[int, ...], a: int) -> list[tuple]:
    """Split a raw row so that the sons are exactly its noncovers of ``a``.

    Assumes the row does not already satisfy ``a``.
    """
    sons = []
    cur = list(bubbles)
    for b in bubbles:
        inter = b & a
        if not inter:
            continue
        i = cur.index(b)
        rest = cur[:i] + cur[i + 1:]
        # son: not all of the bubble's part inside a is 1, the outside part is free
        if inter & (inter - 1):
            sons.append((zeros, ones, tuple(cur[:i] + [inter] + cur[i + 1:])))
        else:
            sons.append((zeros | inter, ones, tuple(rest)))
        # continue: that part is all ones, the outside part must keep a zero
        ones |= inter
        remainder = b & ~a
        if remainder & (remainder - 1):
            cur = rest + [remainder]
        else:
            zeros |= remainder
            cur = rest
    used = zeros | ones
    for b in cur:
        used |= b
    free_a = a & ~used
    if free_a:
        if free_a & (free_a - 1):
            sons.append((zeros, ones, tuple(cur) + (free_a,)))
        else:
            sons.append((zeros | free_a, ones, tuple(cur)))
    return sons


def impose(row: MultiRow, a_star) -> list[MultiRow]:
    """Disjoint rows whose union is ``{x in row : x does not cover a_star}``.

    Returns ``[row]`` when nothing needs to change and ``[]`` when no member
    survives.
    """
    a = _implicant_mask(row, a_star)
    if _satisfied(row.zeros, row.bubbles, a):
        return [row]
    return [MultiRow(row.window, z, o, bs) for z, o, bs in _impose(row.zeros, row.ones, row.bubbles, a)]


@dataclass
class EngineStats:
    pushed: int = 0
    splits: int = 0
    cancellations: int = 0


@dataclass(frozen=True)
class RowSet:
    """The final stack: pairwise disjoint rows covering all zeros of ``b``."""

    window: Window
    rows: tuple[MultiRow, ...]
    stats: EngineStats = field(default_factory=EngineStats, compare=False)

    @property
    def R(self) -> int:
        return len(self.rows)

    @property
    def N(self) -> int:
        return sum(row_cardinality(r) for r in self.rows)

    def __iter__(self):
        return iter(self.rows)

    def __len__(self) -> int:
        return len(self.rows)

    def contains_mask(self, x: int) -> bool:
        return any(r.contains_mask(x) for r in self.rows)


def enumerate_from(start: MultiRow, masks: Sequence[int]) -> RowSet:
    """Run the n-algorithm on ``start`` against the implicant masks in order."""
    h = len(masks)
    stats = EngineStats()
    final = []
    stack = [(start.zeros, start.ones, start.bubbles, 0)]
    while stack:
        zeros, ones, bubbles, pc = stack.pop()
        while pc < h and _satisfied(zeros, bubbles, masks[pc]):
            pc += 1
        if pc == h:
            final.append(MultiRow(start.window, zeros, ones, bubbles))
            continue
        sons = _impose(zeros, ones, bubbles, masks[pc])
        if not sons:
            stats.cancellations += 1
        elif len(sons) > 1:
            stats.splits += 1
        stats.pushed += len(sons)
        # first son ends up on top of the stack
        for z, o, bs in reversed(sons):
            stack.append((z, o, bs, pc + 1))
    return RowSet(start.window, tuple(final), stats)


def enumerate_zeros(pbf: Pbf) -> RowSet:
    """All x with b(x) = 0 as a disjoint union of multivalued rows."""
    return enumerate_from(MultiRow.free(pbf.window), pbf.masks)
