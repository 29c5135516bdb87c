"""Truncated symmetric functions in finitely many labeled variable sets.

A SymSeries is a sparse linear combination of basis monomials indexed by
multipartitions over its label list, held either in the Schur basis ('s') or
the power-sum basis ('p'), with every key of total degree <= the truncation
degree.  All coefficients are exact Fractions; internal arithmetic happens in
the power-sum basis where products are key merges and the standard plethystic
substitutions are diagonal.

Truncation is strict: operations discard keys above the degree and refuse to
mix operands with different truncations, since silently combining series
that remember different amounts of information is the main correctness
hazard in this layer.
"""

from fractions import Fraction
from functools import cache
from math import factorial

from .errors import DomainError
from .partitions import (
    MultiPartition,
    Partition,
    epsilon_sign,
    mn_character,
    mp_sort_key,
    mp_total,
    partitions,
    z_factor,
)


@cache
def schur_to_p_row(kappa: Partition) -> dict[Partition, Fraction]:
    """s_kappa = sum_mu (chi^kappa_mu / z_mu) p_mu."""
    return {
        mu: Fraction(mn_character(kappa, mu), z_factor(mu))
        for mu in partitions(sum(kappa))
        if mn_character(kappa, mu)
    }


@cache
def p_to_schur_row(mu: Partition) -> dict[Partition, int]:
    """p_mu = sum_kappa chi^kappa_mu s_kappa."""
    out = {}
    for kappa in partitions(sum(mu)):
        c = mn_character(kappa, mu)
        if c:
            out[kappa] = c
    return out


def merge_parts(a: Partition, b: Partition) -> Partition:
    return tuple(sorted(a + b, reverse=True))


class SymSeries:
    __slots__ = ("labels", "basis", "degree", "terms")

    def __init__(self, labels, basis, degree, terms=None):
        assert basis in ("p", "s")
        self.labels = tuple(labels)
        self.basis = basis
        self.degree = degree
        self.terms: dict[MultiPartition, Fraction] = {}
        if terms:
            for key, coeff in terms.items():
                if coeff and mp_total(key) <= degree:
                    self.terms[key] = Fraction(coeff)

    # -- constructors -------------------------------------------------------
    @classmethod
    def zero(cls, labels, basis, degree):
        return cls(labels, basis, degree)

    @classmethod
    def one(cls, labels, basis, degree):
        key = ((),) * len(labels)
        return cls(labels, basis, degree, {key: Fraction(1)})

    @classmethod
    def generator(cls, labels, label, basis, partition, degree):
        labels = tuple(labels)
        key = [()] * len(labels)
        key[labels.index(label)] = tuple(partition)
        return cls(labels, basis, degree, {tuple(key): Fraction(1)})

    # -- bookkeeping --------------------------------------------------------
    def _check_compatible(self, other: "SymSeries"):
        if self.labels != other.labels:
            raise DomainError(f"label mismatch: {self.labels} vs {other.labels}")
        if self.degree != other.degree:
            raise DomainError(
                f"truncation mismatch: {self.degree} vs {other.degree}"
            )

    def coefficient(self, key: MultiPartition) -> Fraction:
        return self.terms.get(key, Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.terms.values())

    def __eq__(self, other):
        return (
            isinstance(other, SymSeries)
            and self.labels == other.labels
            and self.basis == other.basis
            and self.degree == other.degree
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.labels, self.basis, self.degree, frozenset(self.terms.items())))

    def __repr__(self):
        return f"SymSeries({self.basis}, D={self.degree}, {format_series(self)})"

    # -- linear structure ----------------------------------------------------
    def __add__(self, other: "SymSeries") -> "SymSeries":
        self._check_compatible(other)
        if self.basis != other.basis:
            raise DomainError("cannot add series held in different bases")
        terms = dict(self.terms)
        for key, coeff in other.terms.items():
            new = terms.get(key, Fraction(0)) + coeff
            if new:
                terms[key] = new
            else:
                terms.pop(key, None)
        return SymSeries(self.labels, self.basis, self.degree, terms)

    def __sub__(self, other: "SymSeries") -> "SymSeries":
        return self + other.scale(-1)

    def scale(self, c) -> "SymSeries":
        c = Fraction(c)
        if not c:
            return SymSeries.zero(self.labels, self.basis, self.degree)
        return SymSeries(
            self.labels, self.basis, self.degree,
            {key: coeff * c for key, coeff in self.terms.items()},
        )

    def __mul__(self, other: "SymSeries") -> "SymSeries":
        return multiply(self, other)


def schur_to_power(f: SymSeries) -> SymSeries:
    if f.basis != "s":
        raise DomainError("schur_to_power wants a Schur-basis series")
    return _convert(f, schur_to_p_row, "p")


def power_to_schur(f: SymSeries) -> SymSeries:
    if f.basis != "p":
        raise DomainError("power_to_schur wants a power-sum series")
    return _convert(f, p_to_schur_row, "s")


def _convert(f: SymSeries, row, target: str) -> SymSeries:
    terms: dict[MultiPartition, Fraction] = {}
    for key, coeff in f.terms.items():
        # per-label conversion rows tensor together
        partial = [((), Fraction(1))]
        for p in key:
            if not p:
                continue
            r = row(p)
            partial = [
                (pref + (q,), c * rc)
                for pref, c in partial
                for q, rc in r.items()
            ]
        # re-attach empty slots in position
        slots = [i for i, p in enumerate(key) if p]
        for seq, c in partial:
            out = [()] * len(key)
            for i, q in zip(slots, seq):
                out[i] = q
            k = tuple(out)
            new = terms.get(k, Fraction(0)) + coeff * c
            if new:
                terms[k] = new
            else:
                terms.pop(k, None)
    return SymSeries(f.labels, target, f.degree, terms)


def as_power(f: SymSeries) -> SymSeries:
    return f if f.basis == "p" else schur_to_power(f)


def as_schur(f: SymSeries) -> SymSeries:
    return f if f.basis == "s" else power_to_schur(f)


def multiply(a: SymSeries, b: SymSeries) -> SymSeries:
    """Product truncated at the common degree.

    Power-sum keys multiply by merging each slot's parts; Schur operands take
    the power-sum route and convert back.
    """
    a._check_compatible(b)
    want_schur = a.basis == "s" and b.basis == "s"
    if a.basis != b.basis:
        raise DomainError("operands must be held in the same basis")
    pa, pb = as_power(a), as_power(b)
    D = a.degree
    terms: dict[MultiPartition, Fraction] = {}
    bk = [(key, mp_total(key), coeff) for key, coeff in pb.terms.items()]
    for ka, ca in pa.terms.items():
        da = mp_total(ka)
        for kb, db, cb in bk:
            if da + db > D:
                continue
            key = tuple(merge_parts(x, y) for x, y in zip(ka, kb))
            new = terms.get(key, Fraction(0)) + ca * cb
            if new:
                terms[key] = new
            else:
                terms.pop(key, None)
    out = SymSeries(a.labels, "p", D, terms)
    return power_to_schur(out) if want_schur else out


@cache
def schur_product_row(mu: Partition, nu: Partition) -> dict[Partition, int]:
    """Expansion of s_mu * s_nu in the Schur basis (all LR coefficients)."""
    n = sum(mu) + sum(nu)
    f = SymSeries.generator(("x",), "x", "s", mu, n)
    g = SymSeries.generator(("x",), "x", "s", nu, n)
    prod = as_schur(multiply(schur_to_power(f), schur_to_power(g)))
    out = {}
    for key, coeff in prod.terms.items():
        assert coeff.denominator == 1
        out[key[0]] = int(coeff)
    return out


def lr_coefficient(mu: Partition, nu: Partition, lam: Partition) -> int:
    """Littlewood-Richardson coefficient c^lam_{mu,nu}; 0 on size mismatch."""
    if sum(mu) + sum(nu) != sum(lam):
        return 0
    return schur_product_row(tuple(mu), tuple(nu)).get(tuple(lam), 0)


def kronecker_coefficient(mu: Partition, nu: Partition, lam: Partition) -> int:
    """Tensor-product multiplicity sum_rho chi^mu chi^nu chi^lam / z_rho."""
    n = sum(mu)
    if sum(nu) != n or sum(lam) != n:
        return 0
    total = Fraction(0)
    for rho in partitions(n):
        total += Fraction(
            mn_character(tuple(mu), rho)
            * mn_character(tuple(nu), rho)
            * mn_character(tuple(lam), rho),
            z_factor(rho),
        )
    assert total.denominator == 1
    return int(total)


def substitute_variable_sets(f: SymSeries, plan: dict, out_labels) -> SymSeries:
    """Replace whole variable sets, power sum by power sum.

    ``plan`` maps an input label to a list of (monomial, multiplicity) pairs,
    a monomial being a tuple of output labels whose variable sets are
    multiplied together; multiplicities may be negative (virtual sets).  Each
    p_l of a planned label becomes
        sum_j mult_j * prod_{L in monomial_j} p_l(L).
    Labels missing from the plan pass through unchanged and must exist among
    the output labels.  The result is in the power-sum basis.
    """
    out_labels = tuple(out_labels)
    f = as_power(f)
    D = f.degree
    index = {lab: i for i, lab in enumerate(out_labels)}
    nout = len(out_labels)

    factor_cache: dict[tuple[str, int], list] = {}

    def level_factor(label: str, l: int):
        got = factor_cache.get((label, l))
        if got is not None:
            return got
        expanded: dict[MultiPartition, int] = {}
        if label in plan:
            for monomial, mult in plan[label]:
                key = [()] * nout
                for lab in monomial:
                    key[index[lab]] = merge_parts(key[index[lab]], (l,))
                k = tuple(key)
                expanded[k] = expanded.get(k, 0) + mult
        else:
            if label not in index:
                raise DomainError(
                    f"label {label!r} absent from plan and output labels"
                )
            key = [()] * nout
            key[index[label]] = (l,)
            expanded[tuple(key)] = 1
        got = [(k, c) for k, c in expanded.items() if c]
        factor_cache[(label, l)] = got
        return got

    terms: dict[MultiPartition, Fraction] = {}
    for key, coeff in f.terms.items():
        partial: dict[MultiPartition, Fraction] = {((),) * nout: coeff}
        for slot, p in enumerate(key):
            label = f.labels[slot]
            for l in p:
                nxt: dict[MultiPartition, Fraction] = {}
                for k1, c1 in partial.items():
                    d1 = mp_total(k1)
                    for k2, c2 in level_factor(label, l):
                        if d1 + mp_total(k2) > D:
                            continue
                        k = tuple(merge_parts(x, y) for x, y in zip(k1, k2))
                        new = nxt.get(k, Fraction(0)) + c1 * c2
                        if new:
                            nxt[k] = new
                        else:
                            nxt.pop(k, None)
                partial = nxt
                if not partial:
                    break
        for k, c in partial.items():
            new = terms.get(k, Fraction(0)) + c
            if new:
                terms[k] = new
            else:
                terms.pop(k, None)
    return SymSeries(out_labels, "p", D, terms)


def omega(f: SymSeries, label: str) -> SymSeries:
    """The involution omega in one variable set: p_l -> (-1)^(l-1) p_l,
    equivalently conjugation of that slot's partition on Schur keys."""
    slot = f.labels.index(label)
    terms = {}
    if f.basis == "p":
        for key, coeff in f.terms.items():
            terms[key] = coeff * epsilon_sign(key[slot])
    else:
        from .partitions import conjugate

        for key, coeff in f.terms.items():
            k = list(key)
            k[slot] = conjugate(k[slot])
            terms[tuple(k)] = coeff
    return SymSeries(f.labels, f.basis, f.degree, terms)


def evaluate_geometric(f: SymSeries, label: str, r: int) -> dict[int, Fraction]:
    """Specialize one variable set to the single value t^r (p_l -> t^(r l)).

    The series must not involve any other variable set; returns {exponent:
    coefficient} for the resulting polynomial in t.
    """
    f = as_power(f)
    slot = f.labels.index(label)
    out: dict[int, Fraction] = {}
    for key, coeff in f.terms.items():
        for i, p in enumerate(key):
            if i != slot and p:
                raise DomainError(
                    "evaluate_geometric needs a series in the named set only"
                )
        e = r * sum(key[slot])
        new = out.get(e, Fraction(0)) + coeff
        if new:
            out[e] = new
        else:
            out.pop(e, None)
    return out


def hall_pairing(a: SymSeries, b: SymSeries) -> Fraction:
    """<p_lam, p_mu> = delta z_lam, extended multiplicatively over labels."""
    a._check_compatible(b)
    pa, pb = as_power(a), as_power(b)
    total = Fraction(0)
    small, big = (pa.terms, pb.terms) if len(pa.terms) <= len(pb.terms) else (pb.terms, pa.terms)
    for key, ca in small.items():
        cb = big.get(key)
        if cb is None:
            continue
        z = 1
        for p in key:
            z *= z_factor(p)
        total += ca * cb * z
    return total


def e_series(labels, label: str, n: int, degree: int) -> SymSeries:
    """e_n = s_(1^n) as a power-sum series."""
    return schur_to_power(
        SymSeries.generator(labels, label, "s", (1,) * n, degree)
    )


def h_series(labels, label: str, n: int, degree: int) -> SymSeries:
    """h_n = s_(n) as a power-sum series."""
    part = (n,) if n else ()
    return schur_to_power(SymSeries.generator(labels, label, "s", part, degree))


def cauchy_kernel(degree: int) -> SymSeries:
    """exp(sum_l p_l(x) p_l(y) / l) truncated at total degree ``degree``.

    Equals sum_lam s_lam(x) s_lam(y); the bidegree-(n,n) slice is complete
    whenever 2n <= degree.
    """
    labels = ("x", "y")
    arg = SymSeries.zero(labels, "p", degree)
    for l in range(1, degree // 2 + 1):
        arg = arg + SymSeries(labels, "p", degree, {((l,), (l,)): Fraction(1, l)})
    out = SymSeries.one(labels, "p", degree)
    power = SymSeries.one(labels, "p", degree)
    k = 1
    while True:
        power = multiply(power, arg)
        if power.is_zero():
            break
        out = out + power.scale(Fraction(1, factorial(k)))
        k += 1
    return out


def format_series(f: SymSeries) -> str:
    """Sorted `coeff * s{...}`/`coeff * p{...}` rendering used by --dump."""
    if not f.terms:
        return "0"
    bits = []
    for key in sorted(f.terms, key=mp_sort_key):
        coeff = f.terms[key]
        body = f.basis + _format_mp(key, f.labels)
        if coeff == 1:
            bits.append(("+", body))
        elif coeff == -1:
            bits.append(("-", body))
        elif coeff > 0:
            bits.append(("+", f"{coeff}*{body}"))
        else:
            bits.append(("-", f"{-coeff}*{body}"))
    sign, first = bits[0]
    text = ("-" if sign == "-" else "") + first
    for sign, chunk in bits[1:]:
        text += f" {sign} {chunk}"
    return text


def _format_mp(key: MultiPartition, labels) -> str:
    from .partitions import format_multipartition

    return format_multipartition(key, tuple(labels))
