"""Positive Boolean functions in disjunctive normal form.

Implicants are kept twice: as sorted tuples of window positions (what users
see) and as integer bitmasks over the canonical range ``0..w-1`` (what every
algorithm works with).  Bit ``k`` of a mask stands for position ``lo + k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

__all__ = [
    "Window",
    "Pbf",
    "WindowMismatch",
    "mask_bits",
    "absorb",
    "dualize",
    "compose",
    "eval_bool",
    "eval_real",
]


class WindowMismatch(ValueError):
    pass


def mask_bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask``, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True)
class Window:
    lo: int
    hi: int

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty window {self.lo}..{self.hi}")

    @property
    def width(self) -> int:
        return self.hi - self.lo + 1

    @property
    def positions(self) -> range:
        return range(self.lo, self.hi + 1)

    @classmethod
    def centered(cls, half: int) -> "Window":
        return cls(-half, half)

    def __contains__(self, pos: int) -> bool:
        return self.lo <= pos <= self.hi

    def __str__(self) -> str:
        return f"{self.lo}..{self.hi}"


@dataclass(frozen=True)
class Pbf:
    """A positive Boolean function ``b`` given by its implicants.

    An empty implicant list is the constant 0; a list holding the empty
    implicant is the constant 1.
    """

    window: Window
    implicants: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        clean = []
        for imp in self.implicants:
            imp = tuple(sorted(imp))
            if len(set(imp)) != len(imp):
                raise ValueError(f"duplicate position in implicant {imp}")
            for pos in imp:
                if pos not in self.window:
                    raise ValueError(f"position {pos} outside window {self.window}")
            clean.append(imp)
        object.__setattr__(self, "implicants", tuple(clean))

    @classmethod
    def from_masks(cls, window: Window, masks: Iterable[int]) -> "Pbf":
        lo = window.lo
        return cls(window, tuple(tuple(lo + k for k in mask_bits(m)) for m in masks))

    @cached_property
    def masks(self) -> tuple[int, ...]:
        lo = self.window.lo
        return tuple(sum(1 << (p - lo) for p in imp) for imp in self.implicants)

    @property
    def w(self) -> int:
        return self.window.width

    @property
    def h(self) -> int:
        return len(self.implicants)

    @property
    def is_zero(self) -> bool:
        return not self.implicants

    @property
    def is_one(self) -> bool:
        return any(not imp for imp in self.implicants)

    def is_normalized(self) -> bool:
        ms = self.masks
        return all(
            i == j or (a & b) != a
            for i, a in enumerate(ms)
            for j, b in enumerate(ms)
        )

    def implicant_set(self) -> frozenset[tuple[int, ...]]:
        return frozenset(self.implicants)

    def embed(self, window: Window) -> "Pbf":
        """The same function over a larger window (extra variables fictitious)."""
        if window.lo > self.window.lo or window.hi < self.window.hi:
            raise WindowMismatch(f"{window} does not contain {self.window}")
        return Pbf(window, self.implicants)

    def shifted(self, offset: int) -> "Pbf":
        return Pbf(
            Window(self.window.lo + offset, self.window.hi + offset),
            tuple(tuple(p + offset for p in imp) for imp in self.implicants),
        )

    def __call__(self, x: Sequence[int]) -> int:
        return eval_bool(self, x)


def _bits_to_mask(pbf: Pbf, x: Sequence[int]) -> int:
    if len(x) != pbf.w:
        raise WindowMismatch(f"bitstring of length {len(x)} for window width {pbf.w}")
    m = 0
    for k, bit in enumerate(x):
        if bit:
            m |= 1 << k
    return m


def eval_mask(pbf: Pbf, x: int) -> int:
    return int(any(a & x == a for a in pbf.masks))


def eval_bool(pbf: Pbf, x: Sequence[int]) -> int:
    """b(x) for a 0/1 sequence listed in window order."""
    return eval_mask(pbf, _bits_to_mask(pbf, x))


def eval_real(pbf: Pbf, v: Sequence[float]) -> float:
    """Max-of-min extension of ``b`` to real vectors.

    The constants extend to ``-inf`` (b = 0) and ``+inf`` (b = 1), the
    lattice identities of max and min.
    """
    if len(v) != pbf.w:
        raise WindowMismatch(f"vector of length {len(v)} for window width {pbf.w}")
    lo = pbf.window.lo
    best = float("-inf")
    for imp in pbf.implicants:
        m = min((v[p - lo] for p in imp), default=float("inf"))
        if m > best:
            best = m
    return best


def _minimize(masks: Iterable[int]) -> list[int]:
    """Minimal members of a family of sets, in order of first appearance."""
    ordered = list(dict.fromkeys(masks))
    by_size = sorted(range(len(ordered)), key=lambda i: ordered[i].bit_count())
    kept: list[int] = []
    keep = set()
    for i in by_size:
        m = ordered[i]
        if any(k & m == k for k in kept):
            continue
        kept.append(m)
        keep.add(i)
    return [ordered[i] for i in sorted(keep)]


def _canonical_order(masks: Iterable[int]) -> list[int]:
    # fewer variables first, then lexicographic in position
    return sorted(masks, key=lambda m: (m.bit_count(), mask_bits(m)))


def absorb(pbf: Pbf) -> Pbf:
    """Drop every implicant that contains another one."""
    return Pbf.from_masks(pbf.window, _minimize(pbf.masks))


def _transversals(edges: Sequence[int]) -> list[int]:
    # Berge multiplication: AND in one clause at a time, absorbing eagerly.
    family = [0]
    for e in edges:
        hit = [t for t in family if t & e]
        candidates = list(hit)
        singles = [1 << k for k in mask_bits(e)]
        for t in family:
            if t & e:
                continue
            for s in singles:
                c = t | s
                if not any(h & c == h for h in hit):
                    candidates.append(c)
        family = _minimize(candidates)
        if not family:
            break
    return family


def dualize(pbf: Pbf) -> Pbf:
    """DNF of ``b*(x) = not b(not x)``, i.e. the minimal transversals."""
    return Pbf.from_masks(pbf.window, _canonical_order(_transversals(_minimize(pbf.masks))))


def _and_dnfs(factors: Sequence[Sequence[int]]) -> list[int]:
    acc = [0]
    for f in sorted(factors, key=len):
        acc = _minimize(a | b for a in acc for b in f)
        if not acc:
            break
    return acc


def compose(outer: Pbf, inner: Pbf) -> Pbf:
    """PBF of the cascade ``outer ∘ inner`` (inner filter applied first).

    Each outer variable at offset ``j`` is replaced by the inner DNF shifted
    by ``j``; the conjunctions are multiplied out and absorbed.
    """
    window = Window(outer.window.lo + inner.window.lo, outer.window.hi + inner.window.hi)
    inner_masks = _minimize(inner.masks)
    # the inner DNF shifted to outer offset j starts at bit j - outer.lo
    shifted = {
        j: [m << (j - outer.window.lo) for m in inner_masks]
        for j in outer.window.positions
    }
    terms: list[int] = []
    for imp in _minimize(outer.masks):
        offsets = [outer.window.lo + k for k in mask_bits(imp)]
        terms.extend(_and_dnfs([shifted[j] for j in offsets]))
    return Pbf.from_masks(window, _canonical_order(_minimize(terms)))
