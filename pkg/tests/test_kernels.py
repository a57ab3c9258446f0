"""Parity between the pure-Python and compiled stability kernels."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import quiverstab._kernel as kernel
import quiverstab._stabcore_py as pure
from quiverstab import QuiverAn, intrinsic_weights

try:
    import quiverstab._stabcore as compiled
except ImportError:
    compiled = None

needs_compiled = pytest.mark.skipif(
    compiled is None, reason="compiled kernel not built"
)


def _right_mask(word):
    return QuiverAn(word).right_mask


@needs_compiled
@given(
    st.text(alphabet="RL", max_size=7),
    st.integers(0, 10**6),
)
@settings(max_examples=200, deadline=None)
def test_parity_random_weights(word, seed):
    q = QuiverAn(word)
    rng = random.Random(seed)
    thetas = tuple(rng.randrange(-30, 31) for _ in range(q.n))
    mask = q.right_mask
    assert compiled.first_violation(q.n, mask, thetas) == pure.first_violation(
        q.n, mask, thetas
    )


@needs_compiled
def test_parity_intrinsic_weights():
    from conftest import words_up_to

    for word in words_up_to(9):
        q = QuiverAn(word)
        thetas = intrinsic_weights(q)
        assert compiled.first_violation(q.n, q.right_mask, thetas) is None
        assert pure.first_violation(q.n, q.right_mask, thetas) is None


def test_wrapper_falls_back_on_huge_weights():
    # values beyond the int64 guard must route to the pure kernel
    q = QuiverAn("RL")
    huge = (10**30, -10**30, 5)
    expected = pure.first_violation(q.n, q.right_mask, huge)
    assert kernel.first_violation(q.n, q.right_mask, huge) == expected


def test_wrapper_matches_pure_on_small_input():
    q = QuiverAn("RRLL")
    thetas = (3, 1, -1, 0, -3)
    assert kernel.first_violation(q.n, q.right_mask, thetas) == pure.first_violation(
        q.n, q.right_mask, thetas
    )


def test_closed_masks_shape():
    masks = pure.closed_subset_masks(3, 0b11, 1, 3)  # RR
    assert masks == [0b000, 0b100, 0b110, 0b111]


def test_env_override_forces_pure(monkeypatch):
    import importlib
    import subprocess
    import sys

    code = (
        "import quiverstab;"
        "print(quiverstab.KERNEL_IMPLEMENTATION)"
    )
    out = subprocess.run(
        [sys.executable, "-c", code],
        env={"QUIVERSTAB_PURE": "1", "PATH": "/usr/bin:/bin"},
        capture_output=True,
        text=True,
    )
    assert out.stdout.strip() == "pure"
