import random
from pathlib import Path

import pytest
from hypothesis import strategies as st

from stackfilter.pbf import Pbf, Window, absorb

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

# U2 L2 as a DNF, in canonical order
B1_IMPLICANTS = (
    (-2, -1, 0),
    (-1, 0, 1),
    (0, 1, 2),
    (-4, -3, -2, 1, 2, 3),
    (-3, -2, -1, 1, 2, 3),
    (-3, -2, -1, 2, 3, 4),
)

ACCEPTANCE_RESULTS: list[tuple[str, bool]] = []


@pytest.fixture
def b1():
    return Pbf(Window(-4, 4), B1_IMPLICANTS)


@pytest.fixture
def majority():
    return Pbf(Window(-1, 1), ((-1, 0), (0, 1), (-1, 1)))


@pytest.fixture
def fixtures_dir():
    return FIXTURES


def random_pbf(rng: random.Random, w: int, max_h: int | None = None, lo: int | None = None) -> Pbf:
    """Random absorbed PBF on a window of width w (never constant)."""
    if lo is None:
        lo = -(w // 2)
    window = Window(lo, lo + w - 1)
    h = rng.randint(1, max_h or 2 * w)
    imps = []
    for _ in range(h):
        size = rng.randint(1, w)
        imps.append(tuple(sorted(rng.sample(list(window.positions), size))))
    return absorb(Pbf(window, tuple(imps)))


@st.composite
def pbfs(draw, min_w=1, max_w=8, allow_constants=False, window=None):
    if window is None:
        w = draw(st.integers(min_w, max_w))
        lo = draw(st.integers(-w, 0))
    else:
        w, lo = window.width, window.lo
    positions = list(range(lo, lo + w))
    min_size = 0 if allow_constants else 1
    imps = draw(
        st.lists(
            st.lists(st.sampled_from(positions), min_size=min_size, max_size=w, unique=True),
            min_size=min_size,
            max_size=2 * w,
        )
    )
    return absorb(Pbf(Window(lo, lo + w - 1), tuple(tuple(i) for i in imps)))


def all_masks(w):
    return range(1 << w)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}")
