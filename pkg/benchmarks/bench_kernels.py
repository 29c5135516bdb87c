#!/usr/bin/env python3
"""Benchmark: compiled kernels vs the pure-Python fallback.

Times the three kernel entry points on representative workloads, then an
end-to-end product battery that leans on them.  Run after building the
extension:

    python benchmarks/bench_kernels.py
"""

import random
import sys
import time

from wreathgroth import _purekernels as pure

try:
    from wreathgroth import _speedups as fast
except ImportError:
    fast = None


def timeit(fn, repeat=3):
    best = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best


def character_workload(impl):
    impl._char_cache.clear()

    def run():
        impl._char_cache.clear()
        n = 12
        parts = impl.partitions_of(n)
        total = 0
        for lam in parts:
            for mu in parts:
                total += impl.character(lam, mu)
        return total

    return run


def partitions_workload(impl):
    def run():
        for n in range(30, 36):
            impl.partitions_of(n)

    return run


def words_workload(impl):
    from wreathgroth.ring import matrix_ring

    comm = matrix_ring(2).commutator_table()
    rng = random.Random(0)
    syms = [(l << 16) | u for l in (1, 2) for u in range(4)]
    pairs = [
        (
            tuple(sorted(rng.choices(syms, k=3))),
            tuple(sorted(rng.choices(syms, k=3))),
        )
        for _ in range(400)
    ]

    def run():
        for w1, w2 in pairs:
            impl.normalize_product(w1, w2, comm)

    return run


def oracle_workload():
    # end-to-end: every oracle product of degree <= 3 over Mat2(Z)
    from wreathgroth import pbw
    from wreathgroth.partitions import mp_total, multipartitions_upto
    from wreathgroth.ring import matrix_ring

    def run():
        ring = matrix_ring(2)
        ring._caches.clear()
        keys = multipartitions_upto(4, 2)
        for mu in keys:
            for nu in keys:
                if 0 < mp_total(mu) and 0 < mp_total(nu) and mp_total(mu) + mp_total(nu) <= 3:
                    pbw.oracle_multiply(ring, mu, nu)

    return run


def main():
    if fast is None:
        print("compiled kernels are not built; showing the pure lane only")
    rows = []
    for name, make in [
        ("character table S_12", character_workload),
        ("partitions of 30..35", partitions_workload),
        ("400 PBW word products (Mat2)", words_workload),
    ]:
        tp = timeit(make(pure))
        tf = timeit(make(fast)) if fast else None
        rows.append((name, tp, tf))

    # the end-to-end run picks its lane from the kernels module; time both by
    # monkeypatching the dispatch
    from wreathgroth import kernels

    original = (kernels.character, kernels.partitions_of, kernels.normalize_product)

    def set_lane(impl):
        kernels.character = impl.character
        kernels.partitions_of = impl.partitions_of
        kernels.normalize_product = impl.normalize_product
        import wreathgroth.pbw as pbw_mod

        pbw_mod.kernels = kernels

    set_lane(pure)
    tp = timeit(oracle_workload(), repeat=1)
    tf = None
    if fast:
        set_lane(fast)
        tf = timeit(oracle_workload(), repeat=1)
    kernels.character, kernels.partitions_of, kernels.normalize_product = original
    rows.append(("oracle products deg<=3 (Mat2, end-to-end)", tp, tf))

    width = max(len(r[0]) for r in rows)
    print(f"{'workload'.ljust(width)}  {'pure':>10}  {'compiled':>10}  {'speedup':>8}")
    for name, tp, tf in rows:
        if tf:
            print(f"{name.ljust(width)}  {tp * 1e3:9.1f}ms  {tf * 1e3:9.1f}ms  {tp / tf:7.1f}x")
        else:
            print(f"{name.ljust(width)}  {tp * 1e3:9.1f}ms  {'-':>10}  {'-':>8}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
