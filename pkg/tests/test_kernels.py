"""The two kernel lanes must be indistinguishable."""

import random

import pytest

from wreathgroth import _purekernels as pure
from wreathgroth import kernels
from wreathgroth import ring as rg
from wreathgroth.partitions import partitions

try:
    from wreathgroth import _speedups as fast
except ImportError:  # pragma: no cover - build-environment dependent
    fast = None

needs_fast = pytest.mark.skipif(fast is None, reason="compiled kernels not built")


def test_backend_reports_a_lane():
    assert kernels.backend() in ("pure", "compiled")


@needs_fast
def test_characters_agree():
    for n in range(0, 9):
        for lam in pure.partitions_of(n):
            for mu in pure.partitions_of(n):
                assert fast.character(lam, mu) == pure.character(lam, mu)


@needs_fast
def test_characters_agree_past_the_compiled_cutoff():
    # sizes above the C-long guard must transparently reuse the pure lane
    lam = (13,) * 2  # |lam| = 26 > 24
    mu = tuple([2] * 13)
    assert fast.character(lam, mu) == pure.character(lam, mu)


@needs_fast
def test_partitions_agree():
    for n in range(0, 12):
        assert fast.partitions_of(n) == pure.partitions_of(n)


@needs_fast
def test_normalize_product_agrees():
    rng = random.Random(99)
    M2 = rg.matrix_ring(2)
    comm = M2.commutator_table()
    syms = [(l << 16) | u for l in (1, 2, 3) for u in range(4)]
    for _ in range(200):
        w1 = tuple(sorted(rng.choices(syms, k=rng.randint(0, 4))))
        w2 = tuple(sorted(rng.choices(syms, k=rng.randint(0, 4))))
        assert fast.normalize_product(w1, w2, comm) == pure.normalize_product(
            w1, w2, comm
        )


@needs_fast
def test_normalize_product_commutative_table():
    comm = {}
    w1 = tuple(sorted([(1 << 16) | 1, (2 << 16) | 0]))
    w2 = ((1 << 16) | 0,)
    assert fast.normalize_product(w1, w2, comm) == pure.normalize_product(w1, w2, comm)


def test_partition_counts_match_known_values():
    counts = [len(partitions(n)) for n in range(11)]
    assert counts == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
