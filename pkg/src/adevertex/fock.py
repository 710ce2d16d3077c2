"""Twisted Fock space on odd modes and exact vertex-operator mode extraction.

Monomials are multisets of creation generators, stored as sorted tuples of
(r, j) with r an odd positive level and j a 1-based generator color.  The
color j refers to the simple-root vector h_{a_j}: all contractions go
through the Gram matrix (h_j|h_k) = cartan[j][k], so every inner product is
an integer even for A/E lattices (an orthonormal presentation would force
irrational coordinates; this one is an exact change of basis).

A StateVector is a Scalar-linear combination of (coset, monomial) pairs, the
module C{Q/2Q} (x) C[x^{(j)}_r].  Vertex operator modes are extracted with
no truncation: on a state of degree d the annihilation multidegree q is at
most d and the creation multidegree is q - m, so each mode is a finite sum.
"""

from functools import lru_cache
from math import factorial

from .scalar import Scalar, ZERO, ONE, R2
from gmpy2 import mpq


def mono_degree(mono):
    return sum(r for r, _ in mono)


def mono_insert(mono, r, j):
    return tuple(sorted(mono + ((r, j),)))


def mono_remove(mono, r, j):
    out = list(mono)
    out.remove((r, j))
    return tuple(out)


class StateVector:
    """Map (coset bits, FockMonomial) -> Scalar, zero terms absent."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = dict(terms) if terms else {}

    @staticmethod
    def vacuum(bits=0, coeff=ONE):
        return StateVector({(bits, ()): coeff} if coeff else {})

    @staticmethod
    def from_group_elem(u, mono=()):
        return StateVector({(bits, mono): c for bits, c in u.terms.items()})

    def __eq__(self, other):
        return self.terms == other.terms

    def __add__(self, other):
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            s = out.get(key, ZERO) + coeff
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return StateVector(out)

    def __sub__(self, other):
        return self + other * Scalar(-1)

    def __mul__(self, scalar):
        if isinstance(scalar, int):
            scalar = Scalar(scalar)
        if not scalar:
            return StateVector()
        return StateVector({k: c * scalar for k, c in self.terms.items()})

    def is_zero(self):
        return not self.terms

    def degree_bound(self):
        return max((mono_degree(m) for _, m in self.terms), default=0)

    def render(self):
        bits = []
        for (b, mono), c in sorted(self.terms.items()):
            bits.append(f"({b:b} | {list(mono)}) {c}")
        return "; ".join(bits) if bits else "0"

    def __repr__(self):
        return f"State[{self.render()}]"


def a_mode(lat, h, r, s):
    """The Heisenberg mode a_r(h) applied to a state; r odd, nonzero.

    r < 0 multiplies by the creation generator; r > 0 is the derivation
    fixed by [a_r(h), a_{-r}(h')] = r (h|h') and a_r(h) . vacuum = 0.
    """
    if r == 0 or r % 2 == 0:
        raise ValueError("Heisenberg modes exist for odd r only")
    cartan = lat.cartan
    out = {}

    def add(key, coeff):
        v = out.get(key, ZERO) + coeff
        if v:
            out[key] = v
        else:
            out.pop(key, None)

    if r < 0:
        level = -r
        for (bits, mono), coeff in s.terms.items():
            for j, hj in enumerate(h):
                if hj:
                    add((bits, mono_insert(mono, level, j + 1)), coeff * hj)
    else:
        for (bits, mono), coeff in s.terms.items():
            for rr, j in set(mono):
                if rr != r:
                    continue
                ip = sum(h[k] * cartan[k][j - 1] for k in range(lat.rank) if h[k])
                if not ip:
                    continue
                mult = mono.count((rr, j))
                add((bits, mono_remove(mono, rr, j)), coeff * (mult * r * ip))
    return StateVector(out)


def l0(s):
    """Degree operator: scales each term by its monomial degree."""
    return StateVector({k: c * mono_degree(k[1])
                        for k, c in s.terms.items() if mono_degree(k[1])})


@lru_cache(maxsize=None)
def odd_partitions(total):
    """All multisets of odd positive parts summing to total, as sorted
    tuples of (part, multiplicity)."""
    def gen(remaining, max_part):
        if remaining == 0:
            yield ()
            return
        part = min(max_part, remaining if remaining % 2 else remaining - 1)
        while part >= 1:
            for mult in range(remaining // part, 0, -1):
                for rest in gen(remaining - part * mult, part - 2):
                    yield rest + ((part, mult),)
            part -= 2
    return tuple(gen(total, total if total % 2 else total - 1))


def _apply_ann_power(lat, alpha, r, mult, terms):
    """(a_r(alpha))^mult on a raw terms dict, r > 0."""
    state = StateVector(terms)
    for _ in range(mult):
        state = a_mode(lat, alpha, r, state)
        if state.is_zero():
            break
    return state.terms


def _apply_cre_power(lat, alpha, r, mult, terms):
    state = StateVector(terms)
    for _ in range(mult):
        state = a_mode(lat, alpha, -r, state)
    return state.terms


def _ann_results(lat, alpha, mono):
    """All annihilation products of U^+_{sqrt2*alpha} on one monomial:
    tuples (q, remaining monomial, coefficient) per annihilation degree q,
    with the (-sqrt2/r)^mult / mult! exponential weights folded in."""
    cache = lat.__dict__.setdefault("_ann_cache", {})
    key = (alpha, mono)
    hit = cache.get(key)
    if hit is not None:
        return hit
    d = mono_degree(mono)
    base = {(0, mono): ONE}
    rows = []
    for q in range(d + 1):
        for ann in odd_partitions(q):
            terms = base
            coeff = ONE
            for r, mult in ann:
                terms = _apply_ann_power(lat, alpha, r, mult, terms)
                if not terms:
                    break
                coeff = coeff * (R2 * Scalar(mpq(-1, r))) ** mult \
                    * Scalar(mpq(1, factorial(mult)))
            for (_, mono2), c2 in terms.items():
                rows.append((q, mono2, c2 * coeff))
    result = tuple(rows)
    cache[key] = result
    return result


def _cre_expansion(lat, alpha, p):
    """Creation part of U^-_{sqrt2*alpha} at total degree p, expanded over
    colors: {monomial addition: Scalar}.  Independent of the target state."""
    cache = lat.__dict__.setdefault("_cre_cache", {})
    key = (alpha, p)
    hit = cache.get(key)
    if hit is not None:
        return hit
    out = {}
    for cre in odd_partitions(p):
        terms = {(0, ()): ONE}
        coeff = ONE
        for r, mult in cre:
            terms = _apply_cre_power(lat, alpha, r, mult, terms)
            coeff = coeff * (R2 * Scalar(mpq(1, r))) ** mult \
                * Scalar(mpq(1, factorial(mult)))
        for (_, mono2), c2 in terms.items():
            tot = out.get(mono2, ZERO) + c2 * coeff
            if tot:
                out[mono2] = tot
            else:
                out.pop(mono2, None)
    result = tuple(out.items())
    cache[key] = result
    return result


def _u_mode_on_mono(lat, alpha, m, mono):
    """Fock factor of the z^{-m} mode of U_{sqrt2*alpha}(z) on a monomial;
    returns ((monomial, Scalar), ...)."""
    cache = lat.__dict__.setdefault("_u_cache", {})
    key = (alpha, m, mono)
    hit = cache.get(key)
    if hit is not None:
        return hit
    out = {}
    for q, mono2, coeff in _ann_results(lat, alpha, mono):
        p = q - m
        if p < 0:
            continue
        for add, cadd in _cre_expansion(lat, alpha, p):
            mono3 = tuple(sorted(mono2 + add))
            tot = out.get(mono3, ZERO) + coeff * cadd
            if tot:
                out[mono3] = tot
            else:
                out.pop(mono3, None)
    result = tuple(out.items())
    cache[key] = result
    return result


def gamma_mode(lat, alpha, m, s):
    """The z^{-m} mode of Gamma_alpha(z) = 1/2 e^alpha nu(alpha,.) (x)
    U_{sqrt2*alpha}(z), applied exactly to a state."""
    if lat.inner(alpha, alpha) != 2:
        raise ValueError("gamma modes are defined for roots only")
    abits = lat.coset_bits(alpha)
    half = Scalar(mpq(1, 2))
    out = {}
    for (gbits, mono), coeff in s.terms.items():
        lat_coeff = coeff * half
        if lat.nu_bits(abits, gbits) < 0:
            lat_coeff = -lat_coeff
        nbits = abits ^ gbits
        for mono2, c2 in _u_mode_on_mono(lat, alpha, m, mono):
            key = (nbits, mono2)
            tot = out.get(key, ZERO) + lat_coeff * c2
            if tot:
                out[key] = tot
            else:
                out.pop(key, None)
    return StateVector(out)


def u_pair_mode(lat, alpha, beta, m, k, s, include_lattice=True):
    """Coefficient of z^{-m} w^{-k} in the jointly normal-ordered pair
    U_{sqrt2*alpha; sqrt2*beta}(z, w), with the lattice prefactor
    1/4 nu(alpha,beta) nu(alpha+beta, .) e^{alpha+beta+.} unless disabled."""
    for rt in (alpha, beta):
        if lat.inner(rt, rt) != 2:
            raise ValueError("u_pair_mode is defined for roots only")
    abits = lat.coset_bits(alpha) ^ lat.coset_bits(beta)
    nu_ab = lat.nu(alpha, beta)
    quarter = Scalar(mpq(1, 4))
    out = {}
    for (gbits, mono), coeff in s.terms.items():
        if include_lattice:
            pre = coeff * quarter * nu_ab
            if lat.nu_bits(abits, gbits) < 0:
                pre = -pre
            nbits = abits ^ gbits
        else:
            pre = coeff
            nbits = gbits
        d = mono_degree(mono)
        base = {(0, mono): ONE}
        for qa in range(d + 1):
            pa = qa - m
            if pa < 0:
                continue
            for ann_a in odd_partitions(qa):
                terms = base
                ca = pre
                for r, mult in ann_a:
                    terms = _apply_ann_power(lat, alpha, r, mult, terms)
                    if not terms:
                        break
                    ca = ca * (R2 * Scalar(mpq(-1, r))) ** mult \
                        * Scalar(mpq(1, factorial(mult)))
                if not terms:
                    continue
                dd = max(mono_degree(mo) for _, mo in terms)
                for qb in range(dd + 1):
                    pb = qb - k
                    if pb < 0:
                        continue
                    for ann_b in odd_partitions(qb):
                        terms_b = terms
                        cb = ca
                        for r, mult in ann_b:
                            terms_b = _apply_ann_power(lat, beta, r, mult, terms_b)
                            if not terms_b:
                                break
                            cb = cb * (R2 * Scalar(mpq(-1, r))) ** mult \
                                * Scalar(mpq(1, factorial(mult)))
                        if not terms_b:
                            continue
                        for cre_a in odd_partitions(pa):
                            terms_c = terms_b
                            cc = cb
                            for r, mult in cre_a:
                                terms_c = _apply_cre_power(lat, alpha, r, mult, terms_c)
                                cc = cc * (R2 * Scalar(mpq(1, r))) ** mult \
                                    * Scalar(mpq(1, factorial(mult)))
                            for cre_b in odd_partitions(pb):
                                terms_d = terms_c
                                cd = cc
                                for r, mult in cre_b:
                                    terms_d = _apply_cre_power(lat, beta, r, mult, terms_d)
                                    cd = cd * (R2 * Scalar(mpq(1, r))) ** mult \
                                        * Scalar(mpq(1, factorial(mult)))
                                for (_, mono2), c2 in terms_d.items():
                                    key = (nbits, mono2)
                                    tot = out.get(key, ZERO) + c2 * cd
                                    if tot:
                                        out[key] = tot
                                    else:
                                        out.pop(key, None)
    return StateVector(out)
