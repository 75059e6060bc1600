"""Packed-monomial Buchberger kernel.

Monomials are encoded as single Python ints whose ascending integer order is
the *descending* monomial order, so term heaps and leading-term searches are
plain integer comparisons.  The layout, most significant first, is one group
per order block: a degree field holding ``MAXV - deg(block)`` followed by the
block's exponent fields in reverse variable order.  The encoding is affine in
the exponent vector, so ``K(a*b) = K(a) + K(b) - K(1)`` and a shift by a
quotient ``m / lm`` is the integer ``m - lm``.
"""
from __future__ import annotations

import heapq
from bisect import bisect_right
import itertools
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from .polynomial import MonomialOrder

BITS = 11
MAXV = (1 << (BITS - 1)) - 1  # largest exponent/degree a field can hold
_FIELD = (1 << BITS) - 1


class ExponentOverflow(OverflowError):
    pass


class Encoding:
    """Packing of exponent tuples of ``nvars`` variables for one monomial order."""

    _cache: dict = {}

    def __new__(cls, nvars: int, order: MonomialOrder):
        key = (nvars, order)
        enc = cls._cache.get(key)
        if enc is None:
            enc = super().__new__(cls)
            enc._setup(nvars, order)
            cls._cache[key] = enc
        return enc

    def _setup(self, nvars: int, order: MonomialOrder):
        self.nvars = nvars
        self.order = order
        if order.kind == "degrevlex":
            blocks = [list(range(nvars))]
        elif order.kind == "lex":
            blocks = [[i] for i in range(nvars)]
        else:
            k = min(order.block, nvars)
            blocks = [list(range(k)), list(range(k, nvars))]
            blocks = [b for b in blocks if b]
        nfields = sum(len(b) + 1 for b in blocks)
        shift = nfields * BITS
        var_shift = [0] * nvars
        deg_shift = []
        for b in blocks:
            shift -= BITS
            deg_shift.append((shift, tuple(b)))
            for i in reversed(b):
                shift -= BITS
                var_shift[i] = shift
        self.blocks = blocks
        self.var_shift = var_shift
        self.deg_shift = deg_shift
        self.one = sum(MAXV << s for s, _ in deg_shift)
        # linear part: K(e) = one + sum e_i * weight_i
        self.weights = [
            (1 << var_shift[i]) - (1 << next(s for s, b in deg_shift if i in b))
            for i in range(nvars)
        ]
        guard = 1 << (BITS - 1)
        self.var_guard = sum(guard << s for s in var_shift)
        self.all_guard = self.var_guard + sum(guard << s for s, _ in deg_shift)
        self.var_values = self.var_guard - (self.var_guard >> (BITS - 1))
        # per block: (lowest var shift, mask of the block's var fields,
        # multiplier summing them into the top slot, slot shift, degree shift)
        self._sums = []
        for s_deg, b in deg_shift:
            k = len(b)
            low = s_deg - k * BITS
            self._sums.append(
                (low, (1 << (k * BITS)) - 1, sum(1 << (j * BITS) for j in range(k)), (k - 1) * BITS, s_deg)
            )

    def pack(self, e: Sequence[int]) -> int:
        k = self.one
        for a, w in zip(e, self.weights):
            if a:
                k += a * w
        for s, b in self.deg_shift:
            if sum(e[i] for i in b) > MAXV:
                raise ExponentOverflow("monomial degree exceeds packing range")
        return k

    def unpack(self, k: int) -> Tuple[int, ...]:
        return tuple((k >> s) & _FIELD for s in self.var_shift)

    def divides(self, a: int, b: int) -> bool:
        g = self.var_guard
        return ((b + self.all_guard - a) & g) == g

    def lcm(self, a: int, b: int) -> int:
        # fieldwise max of the exponent fields, then rebuild the degree fields
        ge = (a + self.all_guard - b) & self.var_guard
        sel = ge - (ge >> (BITS - 1))
        vals = (a & sel) | (b & (self.var_values ^ sel))
        k = vals
        for low, mask, mult, top, s_deg in self._sums:
            deg = ((((vals >> low) & mask) * mult) >> top) & _FIELD
            k += (MAXV - deg) << s_deg
        return k

    def degree(self, k: int) -> int:
        if len(self.deg_shift) == 1:
            return MAXV - (k >> self.deg_shift[0][0])
        return sum(MAXV - ((k >> s) & _FIELD) for s, _ in self.deg_shift)


# --------------------------------------------------------------------------
# term dicts {packed monomial: coefficient}; basis elements are (lm, terms)
# with terms[lm] == 1


def pack_terms(terms, enc: Encoding) -> Dict[int, object]:
    pack = enc.pack
    return {pack(m): c for m, c in terms.items()}


def unpack_terms(terms, enc: Encoding) -> dict:
    unpack = enc.unpack
    return {unpack(m): c for m, c in terms.items()}


def make_monic(terms: Dict[int, object], p: int):
    lm = min(terms)
    lc = terms[lm]
    if lc == 1:
        return lm, terms
    if p:
        inv = pow(int(lc), -1, p)
        return lm, {m: c * inv % p for m, c in terms.items()}
    inv = 1 / lc
    return lm, {m: c * inv for m, c in terms.items()}


class _Reducer:
    """Divisor lookup over a basis kept sorted by leading-monomial degree.

    Positive lookups stay valid as the basis changes (any ideal element with a
    dividing leading monomial is a valid reducer), so they are memoized;
    negative lookups are only memoized until the next insertion.
    """

    def __init__(self, enc: Encoding, basis=()):
        self.enc = enc
        self.hit: dict = {}
        self.miss: set = set()
        self.set_basis(basis)

    def set_basis(self, basis):
        degree = self.enc.degree
        self.basis = sorted(basis, key=lambda g: degree(g[0]))
        self.degrees = [degree(g[0]) for g in self.basis]
        self.miss.clear()

    def find(self, m: int):
        g = self.hit.get(m)
        if g is not None:
            return g
        if m in self.miss:
            return None
        V = self.enc.var_guard
        t = m + self.enc.all_guard
        stop = bisect_right(self.degrees, self.enc.degree(m))
        basis = self.basis
        for idx in range(stop):
            g = basis[idx]
            if ((t - g[0]) & V) == V:
                self.hit[m] = g
                return g
        self.miss.add(m)
        return None


def reduce_terms(f: Dict[int, object], reducer: _Reducer, p: int) -> Dict[int, object]:
    """Full normal form of ``f`` with respect to the reducer's basis."""
    if not f:
        return {}
    f = dict(f)
    heap = list(f)
    heapq.heapify(heap)
    rem: Dict[int, object] = {}
    push, pop = heapq.heappush, heapq.heappop
    find = reducer.find
    while heap:
        m = pop(heap)
        c = f.pop(m)
        if not c:
            continue
        g = find(m)
        if g is None:
            rem[m] = c
            continue
        glm, gterms = g
        shift = m - glm
        if p:
            for gm, gc in gterms.items():
                if gm == glm:
                    continue
                t = gm + shift
                v = f.get(t)
                if v is None:
                    f[t] = (-c * gc) % p
                    push(heap, t)
                else:
                    f[t] = (v - c * gc) % p
        else:
            for gm, gc in gterms.items():
                if gm == glm:
                    continue
                t = gm + shift
                v = f.get(t)
                if v is None:
                    f[t] = -c * gc
                    push(heap, t)
                else:
                    f[t] = v - c * gc
    return rem


def spoly(f, g, lcm: int, p: int) -> Dict[int, object]:
    flm, ft = f
    glm, gt = g
    sf = lcm - flm
    sg = lcm - glm
    out: Dict[int, object] = {}
    for m, c in ft.items():
        if m != flm:
            out[m + sf] = c
    for m, c in gt.items():
        if m != glm:
            t = m + sg
            v = out.get(t, 0) - c
            if p:
                v %= p
            if v:
                out[t] = v
            else:
                out.pop(t, None)
    return out


def _monomials_of_degree(n: int, d: int):
    if n == 1:
        yield (d,)
        return
    for a in range(d, -1, -1):
        for rest in _monomials_of_degree(n - 1, d - a):
            yield (a,) + rest


def buchberger_packed(gens: List[Dict[int, object]], enc: Encoding, p: int):
    """Reduced Gröbner basis of packed term dicts; returns sorted (lm, terms) list.

    Normal selection strategy with the Gebauer-Möller criteria.  For
    homogeneous input, S-pairs in a degree where every monomial is already a
    leading monomial are skipped: their remainders are forms of that degree
    with no standard monomials available, hence zero.
    """
    nvars = enc.nvars
    degree = enc.degree
    divides = enc.divides
    lcm_of = enc.lcm
    homogeneous = all(len({degree(m) for m in g}) == 1 for g in gens)

    polys: list = []
    lm_tuples: list = []
    active: list = []
    pairs: list = []  # heap of (lcm, seq, i, j)
    counter = itertools.count()
    reducer = _Reducer(enc)
    saturated_at: Optional[int] = None
    unsaturated: set = set()

    def coprime(i: int, j: int) -> bool:
        for x, y in zip(lm_tuples[i], lm_tuples[j]):
            if x and y:
                return False
        return True

    def update(h: int):
        nonlocal pairs, active
        hlm = polys[h][0]
        G, V = enc.all_guard, enc.var_guard
        cand = [(g, lcm_of(polys[g][0], hlm)) for g in active]
        keep = []
        for idx, (g, l) in enumerate(cand):
            if coprime(g, h):
                keep.append((g, l, True))
                continue
            dominated = False
            t = l + G
            for _, l2 in cand[idx + 1:]:
                if ((t - l2) & V) == V:
                    dominated = True
                    break
            if not dominated:
                for _, l2, _ in keep:
                    if ((t - l2) & V) == V:
                        dominated = True
                        break
            if not dominated:
                keep.append((g, l, False))
        new_pairs = []
        for item in pairs:
            l, _, i, j = item
            if ((l + G - hlm) & V) == V and lcm_of(polys[i][0], hlm) != l and lcm_of(polys[j][0], hlm) != l:
                continue
            new_pairs.append(item)
        for g, l, cop in keep:
            if not cop:
                new_pairs.append((l, next(counter), g, h))
        heapq.heapify(new_pairs)
        pairs = new_pairs
        active = [g for g in active if not divides(hlm, polys[g][0])] + [h]
        unsaturated.clear()

    def add(terms):
        g = make_monic(terms, p)
        polys.append(g)
        lm_tuples.append(enc.unpack(g[0]))
        update(len(polys) - 1)
        reducer.set_basis([polys[k] for k in active])

    def saturated(deg: int) -> bool:
        nonlocal saturated_at
        if saturated_at is not None:
            return deg >= saturated_at
        if deg in unsaturated:
            return False
        lms = [polys[k][0] for k in active]
        pure = {i for k in active for i, a in enumerate(lm_tuples[k]) if a and a == sum(lm_tuples[k])}
        ok = len(pure) == nvars and comb(deg + nvars - 1, nvars - 1) <= 20000
        if ok:
            for e in _monomials_of_degree(nvars, deg):
                m = enc.pack(e)
                if not any(divides(g, m) for g in lms):
                    ok = False
                    break
        if ok:
            saturated_at = deg
            return True
        unsaturated.add(deg)
        return False

    for g in sorted(gens, key=min, reverse=True):
        r = reduce_terms(g, reducer, p)
        if r:
            add(r)

    while pairs:
        l, _, i, j = heapq.heappop(pairs)
        if homogeneous and saturated(degree(l)):
            continue
        r = reduce_terms(spoly(polys[i], polys[j], l, p), reducer, p)
        if r:
            add(r)

    minimal = [polys[i] for i in active]
    out = []
    for idx, (lm, terms) in enumerate(minimal):
        others = _Reducer(enc, minimal[:idx] + minimal[idx + 1:])
        red = reduce_terms({m: c for m, c in terms.items() if m != lm}, others, p)
        red[lm] = terms[lm]
        out.append((lm, red))
    out.sort(key=lambda g: g[0])
    return out


def normal_form_packed(f: Dict[int, object], basis, enc: Encoding, p: int) -> Dict[int, object]:
    return reduce_terms(f, _Reducer(enc, basis), p)
