# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of ``_purekernels``: same three functions, same semantics,
C-level inner loops.  ``tests/test_kernels.py`` holds the two lanes equal on
random inputs.

Character values are computed in C longs; anything big enough to risk
overflow (|lam| > 24 or more than 64 rows) is delegated to the pure lane,
where Python ints are unbounded.
"""

from . import _purekernels

BACKEND = "compiled"

_char_cache = {}

DEF MAXROWS = 64


def character(tuple lam, tuple mu):
    """Murnaghan-Nakayama via beta-numbers; the pure lane documents the
    algorithm."""
    cdef Py_ssize_t n = len(lam)
    cdef long long total_boxes = 0
    cdef Py_ssize_t i
    for i in range(n):
        total_boxes += <long long> lam[i]
    if n > MAXROWS or total_boxes > 24:
        return _purekernels.character(lam, mu)
    return _character(lam, mu)


cdef long long _character(tuple lam, tuple mu):
    if not lam:
        return 1
    key = (lam, mu)
    cached = _char_cache.get(key)
    if cached is not None:
        return cached
    cdef Py_ssize_t n = len(lam)
    cdef long beta[MAXROWS]
    cdef Py_ssize_t i, j, idx
    cdef long k = mu[0]
    cdef tuple rest = mu[1:]
    for i in range(n):
        beta[i] = <long> lam[i] + n - 1 - i
    cdef long long total = 0
    cdef long b, b2, part
    cdef int crossed, hit
    cdef long nb[MAXROWS]
    cdef long long sub
    for i in range(n):
        b = beta[i]
        b2 = b - k
        if b2 < 0:
            continue
        hit = 0
        for j in range(n):
            if beta[j] == b2:
                hit = 1
                break
        if hit:
            continue
        crossed = 0
        for j in range(i + 1, n):
            if beta[j] > b2:
                crossed += 1
        # rebuild the bead positions with b moved to b2, kept descending
        idx = 0
        for j in range(n):
            if j != i and beta[j] > b2:
                nb[idx] = beta[j]
                idx += 1
        nb[idx] = b2
        idx += 1
        for j in range(n):
            if j != i and beta[j] < b2:
                nb[idx] = beta[j]
                idx += 1
        newlam = []
        for j in range(n):
            part = nb[j] - (n - 1 - j)
            if part > 0:
                newlam.append(part)
        sub = _character(tuple(newlam), rest)
        if crossed & 1:
            total -= sub
        else:
            total += sub
    _char_cache[key] = total
    return total


def partitions_of(int n):
    """All partitions of n as tuples, in descending lexicographic order."""
    if n == 0:
        return [()]
    cdef list out = []
    cdef list stack = [((), n, n)]
    cdef tuple prefix
    cdef int remaining, cap, top, first
    while stack:
        prefix, remaining, cap = stack.pop()
        if remaining == 0:
            out.append(prefix)
            continue
        top = cap if cap < remaining else remaining
        for first in range(1, top + 1):
            stack.append((prefix + (first,), remaining - first, first))
    return out


def normalize_product(tuple w1, tuple w2, dict comm):
    """Product of two normal words as {normal word: int coeff}; symbols are
    (level << 16 | index) ints, corrections drawn from ``comm``."""
    cdef dict result = {}
    cdef list stack = [(w1 + w2, 1)]
    cdef tuple word, tw
    cdef object coeff, cur
    cdef Py_ssize_t m, i, j
    cdef long a, b
    cdef long buf[256]
    while stack:
        word, coeff = stack.pop()
        m = len(word)
        if m > 256:
            # absurdly long words would overflow the fixed buffer; the pure
            # lane has no such limit
            return _purekernels.normalize_product(w1, w2, comm)
        for i in range(m):
            buf[i] = <long> word[i]
        i = 0
        while True:
            while i < m - 1 and buf[i] <= buf[i + 1]:
                i += 1
            if i >= m - 1:
                tw = tuple([buf[j] for j in range(m)])
                cur = result.get(tw, 0) + coeff
                result[tw] = cur
                break
            a = buf[i]
            b = buf[i + 1]
            if (a >> 16) == (b >> 16):
                corr = comm.get((a & 0xFFFF, b & 0xFFFF))
                if corr is not None:
                    level = a & ~0xFFFF
                    head = tuple([buf[j] for j in range(i)])
                    tail = tuple([buf[j] for j in range(i + 2, m)])
                    for u, c in corr:
                        stack.append((head + (level | u,) + tail, coeff * c))
            buf[i] = b
            buf[i + 1] = a
            if i > 0:
                i -= 1
    return {w: c for w, c in result.items() if c}
