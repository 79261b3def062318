"""Output distribution, A-profile and rank selection probabilities.

Everything is exact: integer polynomial coefficients and ``Fraction`` rank
probabilities.  The transfer polynomial ``phi(p)`` satisfies
``F_out(t) = phi(F_in(t))`` for i.i.d. input samples.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import NamedTuple

from . import poly
from .rows import MultiRow, RowSet

__all__ = [
    "MixedMonomial",
    "TransferPolynomial",
    "AProfile",
    "row_contribution",
    "row_weight_polynomial",
    "transfer",
    "eval_transfer",
    "a_profile",
    "rank_selection",
]


class MixedMonomial(NamedTuple):
    coeff: int
    p_exp: int
    q_exp: int

    def __str__(self) -> str:
        parts = []
        for sym, e in (("p", self.p_exp), ("q", self.q_exp)):
            if e == 1:
                parts.append(sym)
            elif e > 1:
                parts.append(f"{sym}^{e}")
        body = " ".join(parts)
        if not body:
            return str(self.coeff)
        if self.coeff == 1:
            return body
        if self.coeff == -1:
            return "-" + body
        return f"{self.coeff} {body}"


def _collect(monomials) -> dict[tuple[int, int], int]:
    acc: Counter = Counter()
    for m in monomials:
        acc[m.p_exp, m.q_exp] += m.coeff
    return {k: v for k, v in sorted(acc.items()) if v}


def _format_terms(terms: list[str]) -> str:
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
    return out


@dataclass(frozen=True)
class TransferPolynomial:
    """``phi(p)`` in two forms.

    ``mixed`` lists the per-row monomials in p and q = 1 - p (row order,
    uncollected); ``expanded`` holds the integer coefficients of phi as a
    polynomial in p alone, ascending degree.  Only ``expanded`` is canonical.
    """

    mixed: tuple[MixedMonomial, ...]
    expanded: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.expanded) - 1

    def collected(self) -> dict[tuple[int, int], int]:
        return _collect(self.mixed)

    def __call__(self, p):
        return eval_transfer(self, p)

    def format_mixed(self) -> str:
        return _format_terms([str(m) for m in self.mixed])

    def format_expanded(self) -> str:
        terms = []
        for k, c in enumerate(self.expanded):
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                terms.append(str(MixedMonomial(c, k, 0)))
        return _format_terms(terms)


def row_contribution(row: MultiRow) -> list[MixedMonomial]:
    """Expansion of ``p^#0 q^#1 prod_bubbles (1 - q^|bubble|)``."""
    z, o = row.zeros.bit_count(), row.ones.bit_count()
    # q-exponent -> coefficient of prod (1 - q^s)
    factor = {0: 1}
    for b in row.bubbles:
        s = b.bit_count()
        nxt: Counter = Counter()
        for e, c in factor.items():
            nxt[e] += c
            nxt[e + s] -= c
        factor = {e: c for e, c in nxt.items() if c}
    return [MixedMonomial(c, z, o + e) for e, c in sorted(factor.items())]


def _expand_mixed(collected: dict[tuple[int, int], int]) -> list[int]:
    out: list[int] = []
    q_powers: dict[int, list[int]] = {}
    for (a, b), c in collected.items():
        if b not in q_powers:
            q_powers[b] = poly.binomial(b, -1)
        poly.add_into(out, poly.scale(q_powers[b], c), shift=a)
    return poly.normalize(out)


def transfer(rowset: RowSet) -> TransferPolynomial:
    mixed = []
    for row in rowset:
        mixed.extend(row_contribution(row))
    return TransferPolynomial(tuple(mixed), tuple(_expand_mixed(_collect(mixed))))


def eval_transfer(tp: TransferPolynomial, p):
    return poly.evaluate(tp.expanded, p)


@dataclass(frozen=True)
class AProfile:
    """``counts[i]`` = number of zeros of b with exactly i ones."""

    counts: tuple[int, ...]

    @property
    def w(self) -> int:
        return len(self.counts) - 1

    @property
    def total(self) -> int:
        return sum(self.counts)

    def __getitem__(self, i: int) -> int:
        return self.counts[i]


def row_weight_polynomial(row: MultiRow) -> list[int]:
    """Coefficient k counts the members of ``row`` having k ones."""
    g = poly.monomial(row.ones.bit_count())
    g = poly.mul(g, poly.binomial(row.free_mask.bit_count()))
    for b in row.bubbles:
        s = b.bit_count()
        g = poly.mul(g, poly.add(poly.binomial(s), poly.monomial(s, -1)))
    return g


def a_profile(rowset: RowSet) -> AProfile:
    w = rowset.window.width
    counts = [0] * (w + 1)
    for row in rowset:
        poly.add_into(counts, row_weight_polynomial(row))
    return AProfile(tuple(counts))


def rank_selection(profile: AProfile) -> tuple[Fraction, ...]:
    """``p_i``, i = 1..w: probability that the output is the i-th smallest sample."""
    if not profile.total:
        raise ValueError("b is constantly 1; there is no output rank to select")
    w = profile.w
    density = [Fraction(profile[k], comb(w, k)) for k in range(w + 1)]
    return tuple(density[w - i] - density[w - i + 1] for i in range(1, w + 1))
