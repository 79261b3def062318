from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import B1_IMPLICANTS, pbfs
from stackfilter.ced import CedSyntaxError, build_ced, identity, lower, upper
from stackfilter.dnfio import DnfSyntaxError, format_dnf, parse_dnf
from stackfilter.filtering import apply
from stackfilter.pbf import (
    Pbf,
    Window,
    WindowMismatch,
    absorb,
    compose,
    dualize,
    eval_bool,
    eval_mask,
    eval_real,
)

B1_TEXT = "window -4..4\n" + "\n".join(" ".join(map(str, i)) for i in B1_IMPLICANTS) + "\n"


def bits(m, w):
    return tuple((m >> k) & 1 for k in range(w))


def brute_compose_value(outer, inner, x):
    """outer applied to the inner outputs on the shifted sub-windows of x."""
    lo = outer.window.lo + inner.window.lo
    inner_out = []
    for j in outer.window.positions:
        sub = [x[j + i - lo] for i in inner.window.positions]
        inner_out.append(eval_bool(inner, sub))
    return eval_bool(outer, inner_out)


# -- parsing ---------------------------------------------------------------


def test_parse_b1(b1):
    pbf = parse_dnf(B1_TEXT)
    assert pbf.w == 9 and pbf.h == 6
    assert pbf == b1


def test_parse_identity():
    pbf = parse_dnf("window 0..0\n0\n")
    assert pbf.implicants == ((0,),)


def test_parse_crlf_comments_and_blank_lines():
    pbf = parse_dnf("# header comment\r\nwindow -1..1\r\n\r\n-1 0\r\n# note\r\n0 1\r\n")
    assert pbf.implicants == ((-1, 0), (0, 1))


def test_parse_keeps_order_and_redundancy():
    pbf = parse_dnf("window 0..2\n0 1\n0\n")
    assert pbf.implicants == ((0, 1), (0,))


@pytest.mark.parametrize(
    "text, lineno, fragment",
    [
        ("window -4..4\n5\n", 2, "outside window"),
        ("windo -4..4\n0\n", 1, "expected 'window"),
        ("window 4..-4\n0\n", 1, "empty window"),
        ("window 0..3\n0 1\n1 1\n", 3, "duplicate index"),
        ("window 0..3\n0 x\n", 2, "not an integer"),
        ("", 1, "missing window header"),
    ],
)
def test_parse_errors_carry_line_numbers(text, lineno, fragment):
    with pytest.raises(DnfSyntaxError) as exc:
        parse_dnf(text)
    assert exc.value.lineno == lineno
    assert fragment in str(exc.value)


def test_format_round_trip(b1):
    assert parse_dnf(format_dnf(b1)) == b1


# -- evaluation --------------------------------------------------------------


def test_eval_bool_b1_example(b1):
    assert eval_bool(b1, (1, 1, 0, 1, 0, 1, 0, 1, 1)) == 0


def test_eval_bool_positivity_extremes(b1):
    assert eval_bool(b1, (1,) * 9) == 1
    assert eval_bool(b1, (0,) * 9) == 0


def test_eval_bool_window_mismatch(b1):
    with pytest.raises(WindowMismatch):
        eval_bool(b1, (0, 1))


def test_eval_real_worked_examples():
    # ((x0 or x1) and x-1) or x0, written as a DNF
    b = Pbf(Window(-1, 1), ((0,), (-1, 1)))
    assert eval_real(b, (3, 2, 4)) == 3


def test_eval_real_majority_is_median(majority):
    assert eval_real(majority, (5, 1, 9)) == 5
    rng = np.random.default_rng(7)
    for v in rng.normal(size=(50, 3)):
        assert eval_real(majority, v) == np.median(v)


def test_eval_real_restricts_to_eval_bool(b1):
    for m in range(1 << 9):
        x = bits(m, 9)
        assert eval_real(b1, x) == eval_bool(b1, x)


def test_eval_real_constants():
    w = Window(0, 1)
    assert eval_real(Pbf(w, ()), (1.0, 2.0)) == float("-inf")
    assert eval_real(Pbf(w, ((),)), (1.0, 2.0)) == float("inf")


# -- absorption and duality ----------------------------------------------------


@pytest.mark.parametrize(
    "imps, expected",
    [
        (((0,), (0, 1)), ((0,),)),
        (((1, 2), (2, 3), (1, 2, 3)), ((1, 2), (2, 3))),
        (((1, 2, 3), (2, 3)), ((2, 3),)),
        (((0, 1), (0, 1)), ((0, 1),)),
    ],
)
def test_absorb(imps, expected):
    assert absorb(Pbf(Window(0, 3), imps)).implicants == expected


def test_absorb_leaves_b1_unchanged(b1):
    assert b1.is_normalized()
    assert absorb(b1) == b1


def test_dualize_l1():
    l1 = Pbf(Window(-1, 1), ((-1, 0), (0, 1)))
    d = dualize(l1)
    assert d.implicant_set() == {(0,), (-1, 1)}
    for m in range(8):
        x = bits(m, 3)
        assert eval_bool(d, x) == 1 - eval_bool(l1, tuple(1 - b for b in x))


def test_dualize_single_variable():
    assert dualize(identity()).implicants == ((0,),)


def test_dualize_involution_on_b1(b1):
    assert dualize(dualize(b1)).implicant_set() == b1.implicant_set()


def test_dualize_constants():
    w = Window(0, 2)
    assert dualize(Pbf(w, ())).is_one
    assert dualize(Pbf(w, ((),))).is_zero


@settings(max_examples=150, deadline=None)
@given(pbfs(max_w=10, allow_constants=True))
def test_dual_involution(f):
    assert dualize(dualize(f)).implicant_set() == f.implicant_set()


@settings(max_examples=100, deadline=None)
@given(pbfs(max_w=10, allow_constants=True))
def test_dual_semantics(f):
    d = dualize(f)
    full = (1 << f.w) - 1
    for m in range(1 << f.w):
        assert eval_mask(d, m) == 1 - eval_mask(f, full & ~m)


@settings(max_examples=100, deadline=None)
@given(pbfs(max_w=12, allow_constants=True), st.randoms(use_true_random=False))
def test_positivity(f, rnd):
    # every x compared with each single-bit raise of x
    for m in range(1 << f.w):
        k = rnd.randrange(f.w)
        assert eval_mask(f, m) <= eval_mask(f, m | (1 << k))


# -- composition and cascades --------------------------------------------------


def test_compose_u2_l2_is_b1(b1):
    assert compose(upper(2), lower(2)).implicants == b1.implicants


def test_compose_identity_left(b1):
    assert compose(identity(), b1) == b1


def test_compose_l1_l1_matches_brute_force():
    l1 = lower(1)
    c = compose(l1, l1)
    assert c.window == Window(-2, 2)
    for m in range(1 << 5):
        x = bits(m, 5)
        assert eval_bool(c, x) == brute_compose_value(l1, l1, x)


@settings(max_examples=60, deadline=None)
@given(pbfs(max_w=5), pbfs(max_w=5))
def test_composition_semantics(g, f):
    c = compose(g, f)
    assert c.w == g.w + f.w - 1
    assert c.is_normalized()
    for m in range(1 << c.w):
        x = bits(m, c.w)
        assert eval_bool(c, x) == brute_compose_value(g, f, x)


def test_build_ced_u2l2(b1):
    pbf = build_ced("U2L2")
    assert pbf.window == Window(-4, 4)
    assert pbf.h == 6
    assert pbf.implicants == b1.implicants


def test_build_ced_l1():
    pbf = build_ced("L1")
    assert pbf.implicant_set() == {(-1, 0), (0, 1)}
    # max over the two runs of min, by brute force on reals
    rng = np.random.default_rng(3)
    for v in rng.normal(size=(40, 3)):
        assert eval_real(pbf, v) == max(min(v[0], v[1]), min(v[1], v[2]))


def test_lower_is_max_of_min_of_runs():
    for n in range(1, 4):
        w = 2 * n + 1
        pbf = lower(n)
        for m in range(1 << w):
            x = bits(m, w)
            runs = [all(x[j : j + n + 1]) for j in range(n + 1)]
            assert eval_bool(pbf, x) == int(any(runs))


@pytest.mark.parametrize("spec", ["", "X2", "L", "L2Q", "2L"])
def test_build_ced_rejects_bad_tokens(spec):
    with pytest.raises(CedSyntaxError):
        build_ced(spec)


def test_c2_dnf_size():
    c2 = build_ced("L2U2L1U1")
    assert c2.w == 13
    assert c2.is_normalized()


# -- applying a filter ----------------------------------------------------------


def test_apply_majority_replicate(majority):
    np.testing.assert_array_equal(apply(majority, [5, 1, 9]), [5, 5, 9])


def test_apply_constant_signal(b1):
    np.testing.assert_array_equal(apply(b1, [2.5] * 7), [2.5] * 7)


@pytest.mark.parametrize("boundary", ["replicate", "mirror", "zero"])
def test_apply_matches_eval_real(b1, boundary):
    rng = np.random.default_rng(11)
    z = rng.normal(size=20)
    pad = {"replicate": "edge", "mirror": "symmetric", "zero": "constant"}[boundary]
    zp = np.pad(z, 4, mode=pad)
    expected = [eval_real(b1, zp[k : k + 9]) for k in range(20)]
    np.testing.assert_array_equal(apply(b1, z, boundary=boundary), expected)


def test_apply_lulu_idempotent():
    f = build_ced("U1L1")
    rng = np.random.default_rng(5)
    z = rng.normal(size=200)
    once = apply(f, z)
    np.testing.assert_array_equal(apply(f, once), once)


def test_apply_rejects_unknown_boundary(majority):
    with pytest.raises(ValueError):
        apply(majority, [1.0], boundary="wrap")


@settings(max_examples=50, deadline=None)
@given(pbfs(max_w=6), st.floats(0.1, 10), st.floats(-5, 5))
def test_eval_real_commutes_with_increasing_affine(f, a, c):
    rng = np.random.default_rng(0)
    for v in rng.integers(-20, 20, size=(10, f.w)):
        v = v.astype(float)
        assert eval_real(f, a * v + c) == pytest.approx(a * eval_real(f, v) + c)
