"""Hopf structure on the limit ring, its graded dual, and the formal group law.

The coproduct is slotwise Littlewood-Richardson splitting (dual to
multiplication of Schur monomials in the dual power-series algebra); the
counit picks out the empty key; the antipode is computed on the rational
side, where every generator T_l(U) is primitive, and converted back with an
integrality assertion. The dual algebra appears twice: as Schur-monomial
arithmetic (`dual_multiply`) and through its antipode on power sums, both
checked against the primal structure by exact pairings.

The coproduct dual to *multiplication* is the substitution rule behind the
structure constants; restricted to the e-coordinates it is a formal group
law on the ring of Witt vectors with coefficients twisted to the origin,
extracted symbolically by `formal_group_law`.
"""

from fractions import Fraction
from functools import cache

from . import pbw
from . import symfun as sf
from .errors import DomainError, IntegralityError
from .groth import GrothElement, _substitution_plan, _doubled_labels, product_table
from .partitions import (
    MultiPartition,
    Partition,
    mp_empty,
    partitions,
)
from .ring import BaseRing
from .symfun import SymSeries


@cache
def lr_splits(kappa: Partition) -> tuple:
    """All (alpha, beta, c^kappa_{alpha,beta}) with nonzero coefficient."""
    out = []
    n = sum(kappa)
    for a in range(n + 1):
        for alpha in partitions(a):
            for beta in partitions(n - a):
                c = sf.lr_coefficient(alpha, beta, kappa)
                if c:
                    out.append((alpha, beta, c))
    return tuple(out)


class TensorGroth:
    """Element of the tensor square, sparse over pairs of multipartitions."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: BaseRing, terms=None):
        self.ring = ring
        self.terms: dict[tuple, Fraction] = {}
        if terms:
            for key, c in terms.items():
                if c:
                    self.terms[key] = Fraction(c)

    @classmethod
    def of(cls, a: GrothElement, b: GrothElement):
        out = {}
        for ka, ca in a.terms.items():
            for kb, cb in b.terms.items():
                out[(ka, kb)] = ca * cb
        return cls(a.ring, out)

    def coefficient(self, mu, nu) -> Fraction:
        return self.terms.get((tuple(mu), tuple(nu)), Fraction(0))

    def is_zero(self):
        return not self.terms

    def is_integral(self):
        return all(c.denominator == 1 for c in self.terms.values())

    def __add__(self, other):
        terms = dict(self.terms)
        for k, c in other.terms.items():
            n = terms.get(k, Fraction(0)) + c
            if n:
                terms[k] = n
            else:
                terms.pop(k, None)
        return TensorGroth(self.ring, terms)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = Fraction(c)
        return TensorGroth(self.ring, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other: "TensorGroth") -> "TensorGroth":
        table = product_table(self.ring)
        terms: dict[tuple, Fraction] = {}
        for (m1, n1), c1 in self.terms.items():
            for (m2, n2), c2 in other.terms.items():
                c = c1 * c2
                left = table.constants(m1, m2)
                right = table.constants(n1, n2)
                for lm, cl in left.items():
                    for ln, cr in right.items():
                        key = (lm, ln)
                        n = terms.get(key, Fraction(0)) + c * cl * cr
                        if n:
                            terms[key] = n
                        else:
                            terms.pop(key, None)
        return TensorGroth(self.ring, terms)

    def __eq__(self, other):
        return (
            isinstance(other, TensorGroth)
            and self.ring is other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash(frozenset(self.terms.items()))


def comultiply(x: GrothElement) -> TensorGroth:
    """Delta(Z_lam) = sum prod_U c^{lam(U)}_{mu(U),nu(U)} Z_mu (x) Z_nu."""
    ring = x.ring
    rank = ring.rank()
    terms: dict[tuple, Fraction] = {}
    for lam, coeff in x.terms.items():
        splits = [((mp_empty(rank), mp_empty(rank)), 1)]
        for slot in range(rank):
            if not lam[slot]:
                continue
            nxt = []
            for (mu, nu), c in splits:
                for alpha, beta, k in lr_splits(lam[slot]):
                    m2 = list(mu)
                    n2 = list(nu)
                    m2[slot] = alpha
                    n2[slot] = beta
                    nxt.append(((tuple(m2), tuple(n2)), c * k))
            splits = nxt
        for key, c in splits:
            n = terms.get(key, Fraction(0)) + coeff * c
            if n:
                terms[key] = n
            else:
                terms.pop(key, None)
    return TensorGroth(ring, terms)


def counit(x: GrothElement) -> Fraction:
    """Coefficient of the empty key (the algebra map killing all e_r, r>0)."""
    return x.coefficient(mp_empty(x.ring.rank()))


def antipode(x: GrothElement) -> GrothElement:
    """S computed through the rational side: S(T_l(U)) = -T_l(U), reversed
    word order, then back to the Z basis; must land on integer coefficients."""
    degree = x.degree()
    el = pbw.PBWElement.zero(x.ring, degree)
    for lam, c in x.terms.items():
        el = el + pbw.z_element_pbw(x.ring, lam, degree).scale(c)
    out = pbw.to_z_basis(pbw.antipode_pbw(el))
    if x.is_integral():
        out.assert_integral("antipode image")
    return out


# ---------------------------------------------------------------------------
# the graded dual realized as symmetric-function arithmetic

def dual_multiply(ring: BaseRing, mu: MultiPartition, nu: MultiPartition) -> dict:
    """Product of dual basis vectors: slotwise products of Schur functions."""
    mu, nu = tuple(mu), tuple(nu)
    out: dict[MultiPartition, int] = {mp_empty(ring.rank()): 1}
    for slot in range(ring.rank()):
        row = sf.schur_product_row(mu[slot], nu[slot])
        nxt: dict[MultiPartition, int] = {}
        for key, c in out.items():
            for kappa, k in row.items():
                key2 = list(key)
                key2[slot] = kappa
                key2 = tuple(key2)
                nxt[key2] = nxt.get(key2, 0) + c * k
        out = nxt
    return out


def dual_antipode_power_sum(ring: BaseRing, l: int, degree: int) -> dict[int, SymSeries]:
    """Images S(p_l(x_U)) for all U, from the geometric series

        sum_U S(p_l(x_U)) U = sum_{r>=1} (-1)^r (sum_U p_l(x_U) U)^r

    truncated at symmetric-function degree ``degree``.  Needs the ring unit
    in the basis only for the classical specialization; the series itself is
    basis-intrinsic, so we only require a unit to exist.
    """
    if ring.unit is None:
        raise DomainError("dual antipode needs a unital ring")
    base = pbw.RingSeries(
        ring, degree,
        {
            tuple((l,) if i == u else () for i in range(ring.rank())): {u: 1}
            for u in range(ring.rank())
        },
    )
    total = pbw.RingSeries(ring, degree)
    power = pbw.RingSeries.one(ring, degree)
    for r in range(1, degree // l + 1):
        power = power * base
        if not power.terms:
            break
        total = total + power.scale((-1) ** r)
    out = {}
    for u in range(ring.rank()):
        terms = {}
        for key, vec in total.terms.items():
            c = vec.get(u)
            if c:
                terms[key] = c
        out[u] = SymSeries(ring.labels, "p", degree, terms)
    return out


def dual_antipode_on_schur(ring: BaseRing, lam: MultiPartition, degree: int) -> SymSeries:
    """S applied to the dual vector realized as prod_U s_{lam(U)}(x_U).

    The dual of a Hopf algebra antipode is an algebra map here (the dual is
    commutative), so expand into power-sum monomials and substitute each
    p_l(x_U) by its image."""
    images = {}

    def image(l):
        if l not in images:
            images[l] = dual_antipode_power_sum(ring, l, degree)
        return images[l]

    base = None
    for u, kappa in enumerate(tuple(lam)):
        if not kappa:
            continue
        f = sf.schur_to_power(
            SymSeries.generator(ring.labels, ring.labels[u], "s", kappa, degree)
        )
        base = f if base is None else sf.multiply(base, f)
    if base is None:
        return SymSeries.one(ring.labels, "p", degree)
    out = SymSeries.zero(ring.labels, "p", degree)
    for key, coeff in base.terms.items():
        acc = SymSeries.one(ring.labels, "p", degree)
        for u, p in enumerate(key):
            for l in p:
                acc = sf.multiply(acc, image(l)[u])
                if acc.is_zero():
                    break
        out = out + acc.scale(coeff)
    return out


# ---------------------------------------------------------------------------
# the twist moving the identity of the Witt group to the origin

def theta_twist(f: SymSeries, ring: BaseRing, inverse: bool = False) -> SymSeries:
    """Append (inverse) or remove (forward) the value 1 from the unit's
    variable set: p_l of that set shifts by -1 (forward) or +1 (inverse)."""
    one = ring.unit_index()
    if one is None:
        raise DomainError("the twist needs the ring unit to be a basis element")
    slot = f.labels.index(ring.labels[one])
    shift = Fraction(1 if inverse else -1)
    f = sf.as_power(f)
    terms: dict[MultiPartition, Fraction] = {}
    for key, coeff in f.terms.items():
        expansions = [((), Fraction(1))]
        for l in key[slot]:
            expansions = [
                (parts + extra, c * w)
                for parts, c in expansions
                for extra, w in (((l,), Fraction(1)), ((), shift))
            ]
        for parts, c in expansions:
            k2 = list(key)
            k2[slot] = tuple(sorted(parts, reverse=True))
            k2 = tuple(k2)
            n = terms.get(k2, Fraction(0)) + coeff * c
            if n:
                terms[k2] = n
            else:
                terms.pop(k2, None)
    return SymSeries(f.labels, "p", f.degree, terms)


# ---------------------------------------------------------------------------
# the formal group law on e-coordinates

Symbol = tuple[int, int, int]  # (family, basis index, e-degree)
Monomial = tuple[Symbol, ...]
Poly = dict[Monomial, Fraction]


def _mono_degree(m: Monomial) -> int:
    return sum(s[2] for s in m)


def poly_mul(a: Poly, b: Poly, degree: int) -> Poly:
    out: Poly = {}
    for ka, ca in a.items():
        da = _mono_degree(ka)
        for kb, cb in b.items():
            if da + _mono_degree(kb) > degree:
                continue
            k = tuple(sorted(ka + kb))
            n = out.get(k, Fraction(0)) + ca * cb
            if n:
                out[k] = n
            else:
                out.pop(k, None)
    return out


def poly_substitute(p: Poly, mapping, degree: int) -> Poly:
    """Replace every symbol by `mapping(symbol)` (a Poly), truncating by the
    e-degree grading."""
    out: Poly = {}
    for mono, coeff in p.items():
        acc: Poly = {(): Fraction(1)}
        for s in mono:
            acc = poly_mul(acc, mapping(s), degree)
            if not acc:
                break
        for k, c in acc.items():
            n = out.get(k, Fraction(0)) + coeff * c
            if n:
                out[k] = n
            else:
                out.pop(k, None)
    return out


@cache
def _p_in_e_row(rho: Partition) -> dict[Partition, Fraction]:
    """p_rho expanded over e-monomials (integral via the Newton recursion)."""
    from .witt import power_in_e

    out: dict[Partition, Fraction] = {(): Fraction(1)}
    for l in rho:
        row = power_in_e(l)
        nxt: dict[Partition, Fraction] = {}
        for ka, ca in out.items():
            for kb, cb in row.items():
                k = tuple(sorted(ka + kb, reverse=True))
                n = nxt.get(k, Fraction(0)) + ca * cb
                if n:
                    nxt[k] = n
                else:
                    nxt.pop(k, None)
        out = nxt
    return out


class GroupLaw:
    """For each (U, i): e_i of the product variable set as an integer
    polynomial in the e_j(x_V) (family 0) and e_k(y_W) (family 1)."""

    def __init__(self, ring: BaseRing, degree: int, components):
        self.ring = ring
        self.degree = degree
        self.components: dict[tuple[int, int], Poly] = components

    def component(self, u: int, i: int) -> Poly:
        return self.components[(u, i)]


def formal_group_law(ring: BaseRing, degree: int) -> GroupLaw:
    plan = _substitution_plan(ring)
    out_labels = _doubled_labels(ring)
    k = ring.rank()
    components = {}
    for u in range(k):
        for i in range(1, degree + 1):
            base = SymSeries.generator(ring.labels, ring.labels[u], "s", (1,) * i, degree)
            series = sf.substitute_variable_sets(base, plan, out_labels)
            poly: Poly = {}
            for key, coeff in series.terms.items():
                # per-slot p -> e conversion, slots become symbol families
                acc: Poly = {(): coeff}
                for slot, rho in enumerate(key):
                    if not rho:
                        continue
                    family, v = (0, slot) if slot < k else (1, slot - k)
                    row = _p_in_e_row(rho)
                    nxt: Poly = {}
                    for mono, c in acc.items():
                        for kappa, c2 in row.items():
                            sym_mono = tuple(
                                sorted(mono + tuple((family, v, j) for j in kappa))
                            )
                            n = nxt.get(sym_mono, Fraction(0)) + c * c2
                            if n:
                                nxt[sym_mono] = n
                            else:
                                nxt.pop(sym_mono, None)
                    acc = nxt
                for mono, c in acc.items():
                    if _mono_degree(mono) > degree:
                        continue
                    n = poly.get(mono, Fraction(0)) + c
                    if n:
                        poly[mono] = n
                    else:
                        poly.pop(mono, None)
            for mono, c in poly.items():
                if c.denominator != 1:
                    raise IntegralityError(
                        f"group law component ({ring.labels[u]}, {i}) is not integral"
                    )
            components[(u, i)] = poly
    return GroupLaw(ring, degree, components)


def law_first_order(law: GroupLaw) -> bool:
    """F(a, b) = a + b + higher order: the linear part must be addition."""
    for (u, i), poly in law.components.items():
        for fam in (0, 1):
            if poly.get(((fam, u, i),), Fraction(0)) != 1:
                return False
        for mono, c in poly.items():
            if len(mono) == 1 and mono not in (((0, u, i),), ((1, u, i),)):
                return False
    return True


def law_zero_laws(law: GroupLaw) -> bool:
    """F(a, 0) = a and F(0, b) = b."""
    for (u, i), poly in law.components.items():
        for fam in (0, 1):
            # kill the other family and compare with the bare symbol
            kept = {
                mono: c
                for mono, c in poly.items()
                if all(s[0] == fam for s in mono)
            }
            if kept != {((fam, u, i),): Fraction(1)}:
                return False
    return True


def law_associative(law: GroupLaw, degree: int) -> bool:
    """F(F(a,b),c) == F(a,F(b,c)) symbol-wise up to total degree."""

    def relabel(poly: Poly, fam_map) -> Poly:
        return {
            tuple(sorted((fam_map[f], u, j) for f, u, j in mono)): c
            for mono, c in poly.items()
        }

    def left_map(s: Symbol) -> Poly:
        fam, u, j = s
        if fam == 0:
            return relabel(law.component(u, j), {0: 0, 1: 1})
        return {((2, u, j),): Fraction(1)}

    def right_map(s: Symbol) -> Poly:
        fam, u, j = s
        if fam == 0:
            return {((0, u, j),): Fraction(1)}
        return relabel(law.component(u, j), {0: 1, 1: 2})

    for (u, i), poly in law.components.items():
        lhs = poly_substitute(poly, left_map, degree)
        rhs = poly_substitute(poly, right_map, degree)
        if lhs != rhs:
            return False
    return True
