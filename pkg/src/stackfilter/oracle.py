"""Brute-force reference values by walking every bitstring.

Nothing here touches the row engine; the point is to be obviously right.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product
from math import comb
from typing import Any

from .balanced import BalancedPbf, BalancedProfile
from .distribution import AProfile, MixedMonomial, TransferPolynomial
from .joint import JointMatrix
from .pbf import Pbf

__all__ = [
    "DEFAULT_LIMIT",
    "OracleLimitError",
    "OracleReport",
    "brute_zeros",
    "brute_transfer_profile",
    "brute_joint",
    "brute_balanced",
]

DEFAULT_LIMIT = 22


class OracleLimitError(ValueError):
    pass


@dataclass(frozen=True)
class OracleReport:
    quantity: str
    fast: Any
    brute: Any
    instance: str = ""

    @property
    def equal(self) -> bool:
        return self.fast == self.brute

    def __str__(self) -> str:
        status = "ok" if self.equal else "MISMATCH"
        return f"{self.quantity}: {status}" + (f" ({self.instance})" if self.instance else "")


def _check(width: int, limit: int) -> None:
    if width > limit:
        raise OracleLimitError(f"width {width} exceeds oracle limit {limit}")


def _b(pbf: Pbf, x: tuple[int, ...]) -> int:
    lo = pbf.window.lo
    return int(any(all(x[p - lo] for p in imp) for imp in pbf.implicants))


def brute_zeros(pbf: Pbf, limit: int = DEFAULT_LIMIT) -> list[tuple[int, ...]]:
    """All x with b(x) = 0, lexicographic."""
    _check(pbf.w, limit)
    return [x for x in product((0, 1), repeat=pbf.w) if not _b(pbf, x)]


def brute_transfer_profile(pbf: Pbf, limit: int = DEFAULT_LIMIT) -> tuple[TransferPolynomial, AProfile]:
    w = pbf.w
    zeros = brute_zeros(pbf, limit)
    tally = Counter(sum(x) for x in zeros)
    counts = tuple(tally.get(i, 0) for i in range(w + 1))
    # sum over zeros of p^(w-i) (1-p)^i
    coeffs = [0] * (w + 1)
    for i, n in tally.items():
        for k in range(i + 1):
            coeffs[w - i + k] += n * comb(i, k) * (-1) ** k
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    mixed = tuple(MixedMonomial(1, w - sum(x), sum(x)) for x in zeros)
    return TransferPolynomial(mixed, tuple(coeffs)), AProfile(counts)


def brute_joint(b1: Pbf, b2: Pbf, limit: int = DEFAULT_LIMIT) -> JointMatrix:
    w = b1.w
    _check(2 * w, limit)
    A = [[0] * (w + 1) for _ in range(w + 1)]
    for x in product((0, 1), repeat=w):
        if _b(b1, x):
            continue
        for y in product(*[(0, 1) if xi else (0,) for xi in x]):
            if _b(b2, y):
                continue
            i = sum(1 for xi, yi in zip(x, y) if xi == yi == 0)
            j = sum(1 for xi, yi in zip(x, y) if xi == yi == 1)
            A[i][j] += 1
    return JointMatrix(w, tuple(map(tuple, A)))


def brute_balanced(bpbf: BalancedPbf, limit: int = DEFAULT_LIMIT) -> BalancedProfile:
    w = bpbf.w
    _check(2 * w, limit)
    counts: Counter = Counter()
    for xy in product((0, 1), repeat=2 * w):
        if _b(bpbf.pbf, xy):
            continue
        pairs = list(zip(xy[:w], xy[w:]))
        counts[
            pairs.count((1, 1)),
            pairs.count((1, 0)),
            pairs.count((0, 1)),
            pairs.count((0, 0)),
        ] += 1
    return BalancedProfile(w, dict(sorted(counts.items())))
