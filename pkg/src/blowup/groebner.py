"""Buchberger's algorithm and the ideal toolbox built on it."""
from __future__ import annotations

import itertools
import threading
from typing import Dict, Iterable, List, Optional, Sequence

from .polynomial import (
    DEGREVLEX,
    Monomial,
    MonomialOrder,
    Polynomial,
    PolyRing,
    StructuralError,
    elimination_order,
)
from ._macaulay import MacaulayData
from ._kernel import (
    Encoding,
    buchberger_packed,
    make_monic,
    normal_form_packed,
    pack_terms,
    spoly,
    unpack_terms,
)


class InvariantViolation(RuntimeError):
    """An internal consistency check failed; indicates a bug, not bad input."""


def _divides(a: Monomial, b: Monomial) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _check_ring(polys: Sequence[Polynomial]) -> PolyRing:
    ring = polys[0].ring
    for g in polys:
        if g.ring != ring:
            raise StructuralError("polynomials live in different rings")
    return ring


def buchberger(gens: Sequence[Polynomial], order: MonomialOrder = DEGREVLEX) -> List[Polynomial]:
    """Reduced Gröbner basis of ``gens`` (monic, sorted by decreasing leading term)."""
    gens = [g for g in gens if g]
    if not gens:
        return []
    ring = _check_ring(gens)
    enc = Encoding(ring.nvars, order)
    p = ring.field.characteristic
    out = buchberger_packed([pack_terms(g.terms, enc) for g in gens], enc, p)
    return [Polynomial(ring, unpack_terms(t, enc)) for _, t in out]


def _packed_basis(gb: Sequence[Polynomial], enc: Encoding, p: int):
    return [make_monic(pack_terms(g.terms, enc), p) for g in gb]


def normal_form(f: Polynomial, gb: Sequence[Polynomial], order: MonomialOrder = DEGREVLEX) -> Polynomial:
    """Unique remainder of ``f`` modulo the Gröbner basis ``gb``."""
    if not gb or f.is_zero():
        return f
    _check_ring([f, *gb])
    enc = Encoding(f.ring.nvars, order)
    p = f.ring.field.characteristic
    rem = normal_form_packed(pack_terms(f.terms, enc), _packed_basis(gb, enc, p), enc, p)
    return Polynomial(f.ring, unpack_terms(rem, enc))


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder = DEGREVLEX) -> Polynomial:
    enc = Encoding(f.ring.nvars, order)
    p = f.ring.field.characteristic
    a, b = _packed_basis([f, g], enc, p)
    return Polynomial(f.ring, unpack_terms(spoly(a, b, enc.lcm(a[0], b[0]), p), enc))


def is_groebner_basis(gb: Sequence[Polynomial], order: MonomialOrder = DEGREVLEX) -> bool:
    """Buchberger's criterion: every S-polynomial reduces to zero."""
    for f, g in itertools.combinations(gb, 2):
        if not normal_form(s_polynomial(f, g, order), gb, order).is_zero():
            return False
    return True


def is_reduced_basis(gb: Sequence[Polynomial], order: MonomialOrder = DEGREVLEX) -> bool:
    """Monic leading terms and no term divisible by another element's leading term."""
    lms = [g.leading_monomial(order) for g in gb]
    for idx, g in enumerate(gb):
        if g.terms[lms[idx]] != 1:
            return False
        for m in g.terms:
            for jdx, other in enumerate(lms):
                if jdx != idx and _divides(other, m):
                    return False
    return True


# --------------------------------------------------------------------------
# ideals


def _canonical_key(f: Polynomial):
    return frozenset(f.monic().terms.items())


_UNSET = object()


class Ideal:
    """Ideal of a polynomial ring given by generators, with cached Gröbner bases.

    Generators are deduplicated up to nonzero scalars; for monomial ideals,
    generators divisible by other generators are dropped as well.
    """

    def __init__(self, ring: PolyRing, gens: Iterable[Polynomial] = ()):
        self.ring = ring
        seen = set()
        kept = []
        for g in gens:
            if not isinstance(g, Polynomial):
                g = ring.constant(g)
            if g.ring != ring:
                raise StructuralError(f"generator {g} not in {ring}")
            if g.is_zero():
                continue
            k = _canonical_key(g)
            if k not in seen:
                seen.add(k)
                kept.append(g)
        if kept and all(g.is_monomial() for g in kept):
            kept = _minimal_monomial_gens(kept)
        self.gens: tuple[Polynomial, ...] = tuple(kept)
        self._gb: dict = {}
        self._dim = _UNSET
        self._mac = None
        self._lock = threading.Lock()

    # -- construction helpers
    @classmethod
    def unit(cls, ring: PolyRing) -> "Ideal":
        return cls(ring, [ring.one()])

    @classmethod
    def maximal(cls, ring: PolyRing) -> "Ideal":
        return cls(ring, ring.gens())

    @classmethod
    def from_strings(cls, ring: PolyRing, texts: Iterable[str]) -> "Ideal":
        return cls(ring, [ring(t) for t in texts])

    # -- Gröbner data
    def groebner_basis(self, order: MonomialOrder = DEGREVLEX) -> List[Polynomial]:
        gb = self._gb.get(order)
        if gb is None:
            gb = buchberger(self.gens, order)
            with self._lock:
                gb = self._gb.setdefault(order, gb)
        return gb

    gb = groebner_basis

    def leading_monomials(self, order: MonomialOrder = DEGREVLEX) -> List[Monomial]:
        return [g.leading_monomial(order) for g in self.groebner_basis(order)]

    # -- predicates
    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        gb = self.groebner_basis()
        return len(gb) == 1 and gb[0].total_degree() == 0

    def is_monomial(self) -> bool:
        return all(g.is_monomial() for g in self.gens)

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.gens)

    def contains(self, f: Polynomial) -> bool:
        return ideal_membership(f, self)

    __contains__ = contains

    def contains_ideal(self, other: "Ideal") -> bool:
        return all(self.contains(g) for g in other.gens)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        if self.ring != other.ring:
            return False
        return self.groebner_basis() == other.groebner_basis()

    def __hash__(self):
        return hash((self.ring, tuple(self.groebner_basis())))

    def __le__(self, other: "Ideal") -> bool:
        return other.contains_ideal(self)

    # -- operations
    def __add__(self, other: "Ideal") -> "Ideal":
        return ideal_sum(self, other)

    def __mul__(self, other: "Ideal") -> "Ideal":
        return ideal_product(self, other)

    def __pow__(self, n: int) -> "Ideal":
        return ideal_power_ladder(self, n)[-1]

    def __and__(self, other: "Ideal") -> "Ideal":
        return ideal_intersection(self, other)

    def quotient(self, f) -> "Ideal":
        return ideal_colon(self, f)

    def embed(self, ring: PolyRing, offset: int = 0) -> "Ideal":
        return Ideal(ring, [g.embed(ring, offset) for g in self.gens])

    def __repr__(self):
        return f"Ideal({', '.join(map(str, self.gens))})"

    # -- zero-dimensional data
    def vector_space_dimension(self) -> Optional[int]:
        """dim_k R/self, or None when the quotient is infinite dimensional.

        Homogeneous non-monomial ideals over GF(p) are counted degree by degree
        from Macaulay matrices unless a degrevlex basis was computed first.
        """
        if self._dim is _UNSET:
            mac = self._linear_algebra()
            if mac is not None:
                self._dim = mac.quotient_dimension()
            else:
                self._dim = standard_monomial_count(self.leading_monomials(DEGREVLEX), self.ring.nvars)
        return self._dim

    def _linear_algebra(self) -> Optional[MacaulayData]:
        """Macaulay data when it replaces Buchberger: homogeneous, non-monomial, over GF(p)."""
        if self._mac is None:
            p = self.ring.field.characteristic
            use = bool(p and self.gens and DEGREVLEX not in self._gb
                       and self.is_homogeneous() and not self.is_monomial())
            mac = MacaulayData([g.terms for g in self.gens], self.ring.nvars, p) if use else False
            with self._lock:
                if self._mac is None:
                    self._mac = mac
        return self._mac or None

    def is_zero_dimensional(self) -> bool:
        return self.vector_space_dimension() is not None


def _minimal_monomial_gens(gens: List[Polynomial]) -> List[Polynomial]:
    monos = sorted({next(iter(g.terms)) for g in gens}, key=sum)
    keep: List[Monomial] = []
    for m in monos:
        if not any(_divides(k, m) for k in keep):
            keep.append(m)
    ring = gens[0].ring
    one = ring.field(1)
    return [Polynomial(ring, {m: one}) for m in sorted(keep, key=DEGREVLEX.sort_key)]


def standard_monomial_count(lms: Sequence[Monomial], nvars: int) -> Optional[int]:
    """Number of monomials outside the monomial ideal ``(lms)``; None if infinite."""
    lms = list(lms)
    if any(sum(m) == 0 for m in lms):
        return 0
    bounds = []
    for v in range(nvars):
        pure = [m[v] for m in lms if m[v] and sum(m) == m[v]]
        if not pure:
            return None
        bounds.append(min(pure))
    return _count_outside(lms, nvars, bounds)


def _count_outside(lms, n, bounds) -> int:
    if n == 0:
        return 0 if lms else 1
    if not lms:
        total = 1
        for b in bounds[:n]:
            total *= b
        return total
    last = n - 1
    total = 0
    for e in range(bounds[last]):
        sub = [m[:last] for m in lms if m[last] <= e]
        if any(sum(s) == 0 for s in sub):
            break
        total += _count_outside(_minimalize(sub), last, bounds)
    return total


def _minimalize(monos):
    monos = sorted(set(monos), key=sum)
    keep = []
    for m in monos:
        if not any(_divides(k, m) for k in keep):
            keep.append(m)
    return keep


# --------------------------------------------------------------------------
# ideal operations


def _same_ring(*ideals: Ideal) -> PolyRing:
    ring = ideals[0].ring
    for a in ideals[1:]:
        if a.ring != ring:
            raise StructuralError("ideals live in different rings")
    return ring


def ideal_membership(f: Polynomial, A: Ideal) -> bool:
    if f.ring != A.ring:
        raise StructuralError("ring mismatch")
    if f.is_zero():
        return True
    mac = A._linear_algebra()
    if mac is not None:
        return mac.contains(f.terms)
    gb = A.groebner_basis(DEGREVLEX)
    return normal_form(f, gb, DEGREVLEX).is_zero()


def ideal_sum(A: Ideal, B: Ideal) -> Ideal:
    ring = _same_ring(A, B)
    return Ideal(ring, A.gens + B.gens)


def ideal_product(A: Ideal, B: Ideal) -> Ideal:
    ring = _same_ring(A, B)
    return Ideal(ring, [f * g for f in A.gens for g in B.gens])


def ideal_power_ladder(A: Ideal, n_max: int) -> List[Ideal]:
    """[A^0 = (1), A^1, ..., A^n_max]."""
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    ladder = [Ideal.unit(A.ring)]
    for _ in range(n_max):
        ladder.append(ladder[-1] * A if len(ladder) > 1 else A)
    return ladder


def ideal_intersection(A: Ideal, B: Ideal) -> Ideal:
    """A ∩ B by eliminating t from t·A + (1 - t)·B."""
    ring = _same_ring(A, B)
    if A.is_zero() or B.is_zero():
        return Ideal(ring, [])
    big = ring.extend(front=["t_" + "_".join(ring.variables)])
    t = big.monomial((1,) + (0,) * ring.nvars)
    one_minus_t = big.one() - t
    gens = [t * a.embed(big, 1) for a in A.gens] + [one_minus_t * b.embed(big, 1) for b in B.gens]
    return eliminate(Ideal(big, gens), 1, ring)


def ideal_colon(A: Ideal, f) -> Ideal:
    """(A : f) for a polynomial f, or (A : B) for an ideal B."""
    if isinstance(f, Ideal):
        ring = _same_ring(A, f)
        if f.is_zero():
            return Ideal.unit(ring)
        result = None
        for b in f.gens:
            q = ideal_colon(A, b)
            result = q if result is None else ideal_intersection(result, q)
        return result
    if f.ring != A.ring:
        raise StructuralError("ring mismatch")
    if f.is_zero():
        raise ValueError("colon by the zero polynomial")
    meet = ideal_intersection(A, Ideal(A.ring, [f]))
    quotients = []
    for g in meet.gens:
        try:
            quotients.append(g.exact_divide(f))
        except ArithmeticError as exc:
            raise InvariantViolation(f"intersection generator {g} not divisible by {f}") from exc
    return Ideal(A.ring, quotients)


def eliminate(A: Ideal, drop_count: int, target: Optional[PolyRing] = None) -> Ideal:
    """A ∩ k[remaining variables], dropping the first ``drop_count`` variables."""
    ring = A.ring
    if target is None:
        target = PolyRing(ring.variables[drop_count:], ring.field)
    if drop_count == 0:
        return Ideal(target, [g.restrict(target, 0) for g in A.gens])
    order = elimination_order(drop_count)
    gb = A.groebner_basis(order)
    kept = [g for g in gb if not any(any(m[:drop_count]) for m in g.terms)]
    return Ideal(target, [g.restrict(target, drop_count) for g in kept])
