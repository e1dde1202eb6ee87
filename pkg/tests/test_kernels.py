"""Backend agreement: the compiled kernels and the pure-Python kernels must be
exact drop-in twins on randomized workloads."""

import random

import pytest

from simplestfields._kernels import BACKEND as ACTIVE_BACKEND
from simplestfields._kernels import pykernels

try:
    from simplestfields._kernels import _ckernels
except ImportError:  # pragma: no cover - extension not built
    _ckernels = None

needs_ext = pytest.mark.skipif(_ckernels is None, reason="compiled kernels not built")


def _rand_poly(rng, lo, hi, bits=30):
    return [rng.getrandbits(bits) - (1 << (bits - 1)) for _ in range(rng.randint(lo, hi))]


def _rand_lattice(rng, n):
    while True:
        rows = [[rng.randint(-50, 50) for _ in range(n)] for _ in range(n + rng.randint(0, 2))]
        h = pykernels.hnf_rows(rows, n)
        if len(h) == n:
            return rows, h


def test_pure_kernels_selfconsistent():
    rng = random.Random(1)
    for _ in range(200):
        a = pykernels.zx_trim(_rand_poly(rng, 0, 6))
        b = pykernels.zx_trim(_rand_poly(rng, 0, 6))
        ab = pykernels.zx_mul(a, b)
        ba = pykernels.zx_mul(b, a)
        assert ab == ba
        f = _rand_poly(rng, 2, 5) + [1]  # monic
        if a and b:
            assert pykernels.zx_mod(ab, f) == pykernels.zx_mulmod(a, b, f)


@needs_ext
def test_backends_agree_on_poly_ops():
    rng = random.Random(2)
    for _ in range(300):
        a = _rand_poly(rng, 0, 8)
        b = _rand_poly(rng, 0, 8)
        f = _rand_poly(rng, 1, 6) + [1]
        assert pykernels.zx_mul(a, b) == _ckernels.zx_mul(a, b)
        assert pykernels.zx_mod(a, f) == _ckernels.zx_mod(a, f)
        assert pykernels.zx_mulmod(a, b, f) == _ckernels.zx_mulmod(a, b, f)


@needs_ext
def test_backends_agree_on_resultant():
    rng = random.Random(3)
    for _ in range(300):
        a = pykernels.zx_trim(_rand_poly(rng, 1, 7, bits=12))
        b = pykernels.zx_trim(_rand_poly(rng, 1, 7, bits=12))
        if not a or not b:
            continue
        assert pykernels.zx_resultant(a, b) == _ckernels.zx_resultant(a, b)


@needs_ext
def test_backends_agree_on_lattice_ops():
    rng = random.Random(4)
    for _ in range(120):
        n = rng.randint(1, 6)
        rows, h = _rand_lattice(rng, n)
        assert _ckernels.hnf_rows(rows, n) == h
        # a vector inside the lattice: random integer combination
        coeffs = [rng.randint(-6, 6) for _ in range(n)]
        w = [sum(coeffs[i] * h[i][j] for i in range(n)) for j in range(n)]
        assert pykernels.solve_lower_coords(h, w) == coeffs
        assert _ckernels.solve_lower_coords(h, w) == coeffs
        scale = rng.choice([2, 3, 5])
        r1 = pykernels.vec_reduce_mod_rows(w, h, scale)
        r2 = _ckernels.vec_reduce_mod_rows(w, h, scale)
        assert r1 == r2
        # reduction preserves the class modulo scale * lattice
        diff = [a - b for a, b in zip(w, r1)]
        q = pykernels.solve_lower_coords(h, diff)
        assert all(x % scale == 0 for x in q)


@needs_ext
def test_divexact_agreement_and_errors():
    assert pykernels.zx_divexact([4, -6, 0], 2) == [2, -3, 0]
    assert _ckernels.zx_divexact([4, -6, 0], 2) == [2, -3, 0]
    with pytest.raises(ValueError):
        pykernels.zx_divexact([3], 2)
    with pytest.raises(ValueError):
        _ckernels.zx_divexact([3], 2)


def test_active_backend_is_sane():
    assert ACTIVE_BACKEND in ("python", "cython")
