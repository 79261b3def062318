"""Reading and writing the plain-text DNF file formats.

Plain DNF::

    window -4..4
    # comment
    -2 -1 0
    -1 0 1

Balanced DNF uses the same header for the x-window (the y-block mirrors it)
and tags every variable, e.g. ``x-1 x0 y2``.
"""

from __future__ import annotations

import re
from typing import Iterable, TextIO

from .pbf import Pbf, Window

__all__ = ["DnfSyntaxError", "parse_dnf", "format_dnf", "read_dnf", "parse_balanced", "format_balanced", "read_balanced"]

_HEADER = re.compile(r"^window\s+(-?\d+)\s*\.\.\s*(-?\d+)\s*$")
_TAGGED = re.compile(r"^([xy])(-?\d+)$")


class DnfSyntaxError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def _lines(text: str | Iterable[str]):
    if isinstance(text, str):
        text = text.splitlines()
    for lineno, line in enumerate(text, start=1):
        yield lineno, line.rstrip("\r\n")


def _body(text):
    """Parse the header; return the window and an iterator of (lineno, tokens)."""
    content = (
        (lineno, line.strip())
        for lineno, line in _lines(text)
        if line.strip() and not line.strip().startswith("#")
    )
    try:
        lineno, header = next(content)
    except StopIteration:
        raise DnfSyntaxError(1, "missing window header") from None
    m = _HEADER.match(header)
    if not m:
        raise DnfSyntaxError(lineno, f"expected 'window <lo>..<hi>', got {header!r}")
    lo, hi = int(m.group(1)), int(m.group(2))
    if lo > hi:
        raise DnfSyntaxError(lineno, f"empty window {lo}..{hi}")
    return Window(lo, hi), ((n, line.split()) for n, line in content)


def _check_implicant(lineno, positions, label=str):
    if not positions:
        raise DnfSyntaxError(lineno, "empty implicant")
    seen = set()
    for p in positions:
        if p in seen:
            raise DnfSyntaxError(lineno, f"duplicate index {label(p)}")
        seen.add(p)


def parse_dnf(text: str | Iterable[str]) -> Pbf:
    """Parse a DNF file; implicants keep file order and are not absorbed."""
    window, it = _body(text)
    implicants = []
    for lineno, tokens in it:
        positions = []
        for tok in tokens:
            try:
                p = int(tok)
            except ValueError:
                raise DnfSyntaxError(lineno, f"not an integer: {tok!r}") from None
            if p not in window:
                raise DnfSyntaxError(lineno, f"index {p} outside window {window}")
            positions.append(p)
        _check_implicant(lineno, positions)
        implicants.append(tuple(positions))
    return Pbf(window, tuple(implicants))


def read_dnf(path) -> Pbf:
    with open(path, encoding="utf-8", newline="") as fh:
        return parse_dnf(fh.read())


def format_dnf(pbf: Pbf, out: TextIO | None = None) -> str:
    lines = [f"window {pbf.window.lo}..{pbf.window.hi}"]
    for imp in pbf.implicants:
        if not imp:
            raise ValueError("the constant 1 has no DNF file representation")
        lines.append(" ".join(str(p) for p in imp))
    text = "\n".join(lines) + "\n"
    if out is not None:
        out.write(text)
    return text


def parse_balanced(text: str | Iterable[str]):
    """Parse a balanced DNF file into a :class:`~stackfilter.balanced.BalancedPbf`."""
    from .balanced import BalancedPbf

    window, it = _body(text)
    w = window.width
    implicants = []
    for lineno, tokens in it:
        positions = []
        for tok in tokens:
            m = _TAGGED.match(tok)
            if not m:
                raise DnfSyntaxError(lineno, f"expected x<i> or y<i>, got {tok!r}")
            p = int(m.group(2))
            if p not in window:
                raise DnfSyntaxError(lineno, f"index {tok} outside window {window}")
            positions.append(p - window.lo + (w if m.group(1) == "y" else 0))
        _check_implicant(lineno, positions, label=lambda q: _tag(q, window))
        implicants.append(tuple(positions))
    return BalancedPbf(window, Pbf(Window(0, 2 * w - 1), tuple(implicants)))


def _tag(q: int, window: Window) -> str:
    w = window.width
    return f"x{q + window.lo}" if q < w else f"y{q - w + window.lo}"


def format_balanced(bpbf) -> str:
    lines = [f"window {bpbf.x_window.lo}..{bpbf.x_window.hi}"]
    for imp in bpbf.pbf.implicants:
        lines.append(" ".join(_tag(q, bpbf.x_window) for q in imp))
    return "\n".join(lines) + "\n"


def read_balanced(path):
    with open(path, encoding="utf-8", newline="") as fh:
        return parse_balanced(fh.read())
