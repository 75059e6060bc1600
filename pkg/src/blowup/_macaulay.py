"""Degree-by-degree standard-monomial counts for homogeneous ideals over GF(p).

For a homogeneous ideal A, the pivot columns of an echelon form of the degree-t
Macaulay matrix (columns in decreasing degrevlex order) are exactly the
degree-t leading monomials of A, so ``dim (R/A)_t = #monomials - rank``.
Each degree's row space is spanned by the previous degree's echelon rows
times the variables plus the generators of that degree.
"""
from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

Monomial = Tuple[int, ...]


@lru_cache(maxsize=None)
def _monomials(n: int, d: int) -> Tuple[Monomial, ...]:
    """Monomials of degree d in decreasing degrevlex order."""
    def gen(n, d):
        if n == 1:
            yield (d,)
            return
        for a in range(d, -1, -1):
            for rest in gen(n - 1, d - a):
                yield (a,) + rest

    out = list(gen(n, d)) if n else ([()] if d == 0 else [])
    out.sort(key=lambda e: e[::-1])
    return tuple(out)


@lru_cache(maxsize=None)
def _index(n: int, d: int) -> Dict[Monomial, int]:
    return {m: i for i, m in enumerate(_monomials(n, d))}


@lru_cache(maxsize=None)
def _shift_maps(n: int, d: int) -> Tuple[np.ndarray, ...]:
    """For each variable j, the column in degree d+1 of x_j times each degree-d monomial."""
    src = _monomials(n, d)
    dst = _index(n, d + 1)
    maps = []
    for j in range(n):
        maps.append(np.array([dst[m[:j] + (m[j] + 1,) + m[j + 1:]] for m in src], dtype=np.int64))
    return tuple(maps)


def _echelon(mat: np.ndarray, p: int) -> np.ndarray:
    """Rows of an echelon basis of the row space of ``mat`` modulo p."""
    mat = mat % p
    rows, cols = mat.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(mat[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            mat[[r, piv]] = mat[[piv, r]]
        inv = pow(int(mat[r, c]), -1, p)
        mat[r] = (mat[r] * inv) % p
        below = mat[r + 1:, c]
        hit = np.nonzero(below)[0]
        if hit.size:
            idx = r + 1 + hit
            mat[idx] = (mat[idx] - np.outer(mat[idx, c], mat[r])) % p
        r += 1
    return mat[:r]


class MacaulayData:
    """Echelon bases of the graded pieces of a homogeneous ideal over GF(p), built on demand."""

    def __init__(self, gens: Sequence[Dict[Monomial, int]], nvars: int, p: int):
        self.nvars = nvars
        self.p = p
        self.by_degree: Dict[int, List[Dict[Monomial, int]]] = {}
        for g in gens:
            self.by_degree.setdefault(sum(next(iter(g))), []).append(g)
        self.lo = min(self.by_degree) if self.by_degree else None
        self.top = max(self.by_degree) if self.by_degree else None
        self._pieces: List[np.ndarray] = []  # echelon of degree lo + k
        self._dim: object = _UNSET

    def piece(self, t: int) -> np.ndarray:
        """Echelon rows spanning the degree-t part of the ideal."""
        n, p = self.nvars, self.p
        cols = len(_monomials(n, t))
        if self.lo is None or t < self.lo:
            return np.zeros((0, cols), dtype=np.int64)
        if self.lo == 0:
            return np.eye(cols, dtype=np.int64)
        while len(self._pieces) <= t - self.lo:
            s = self.lo + len(self._pieces)
            width = len(_monomials(n, s))
            prev = self._pieces[-1] if self._pieces else None
            if prev is not None and prev.shape[0] == len(_monomials(n, s - 1)):
                self._pieces.append(np.eye(width, dtype=np.int64))
                continue
            blocks = []
            if prev is not None and prev.shape[0]:
                for m in _shift_maps(n, s - 1):
                    block = np.zeros((prev.shape[0], width), dtype=np.int64)
                    block[:, m] = prev
                    blocks.append(block)
            new = self.by_degree.get(s, [])
            if new:
                index = _index(n, s)
                block = np.zeros((len(new), width), dtype=np.int64)
                for i, g in enumerate(new):
                    for mono, c in g.items():
                        block[i, index[mono]] = int(c) % p
                blocks.append(block)
            mat = np.vstack(blocks) if blocks else np.zeros((0, width), dtype=np.int64)
            self._pieces.append(_echelon(mat, p))
        return self._pieces[t - self.lo]

    def quotient_dimension(self) -> Optional[int]:
        """dim_k R/A, or None if infinite.

        Zero-dimensionality is decided with the bound ``nvars*(D-1)+1`` on the
        first vanishing degree, D the largest generator degree: an m-primary
        homogeneous ideal contains a regular sequence of forms of degree D,
        whose quotient vanishes beyond that degree.
        """
        if self._dim is not _UNSET:
            return self._dim
        n = self.nvars
        dim: Optional[int] = None
        if self.lo == 0:
            dim = 0
        elif n == 0:
            dim = 1
        elif self.lo is not None:
            total = sum(comb(t + n - 1, n - 1) for t in range(self.lo))
            for t in range(self.lo, n * (self.top - 1) + 2):
                cols = len(_monomials(n, t))
                rank = self.piece(t).shape[0]
                total += cols - rank
                if rank == cols:
                    dim = total
                    break
        self._dim = dim
        return dim

    def contains(self, terms: Dict[Monomial, int]) -> bool:
        """Membership of a (not necessarily homogeneous) polynomial."""
        parts: Dict[int, Dict[Monomial, int]] = {}
        for m, c in terms.items():
            parts.setdefault(sum(m), {})[m] = int(c) % self.p
        for t, part in parts.items():
            ech = self.piece(t)
            if ech.shape[0] == 0:
                return False
            index = _index(self.nvars, t)
            v = np.zeros(ech.shape[1], dtype=np.int64)
            for m, c in part.items():
                v[index[m]] = c
            for row in ech:
                c = int(v[np.argmax(row != 0)])
                if c:
                    v = (v - c * row) % self.p
            if v.any():
                return False
        return True


_UNSET = object()


def homogeneous_quotient_dimension(
    gens: Sequence[Dict[Monomial, int]], nvars: int, p: int
) -> Optional[int]:
    """dim_k R/(gens) for homogeneous generators over GF(p); None if infinite."""
    return MacaulayData(gens, nvars, p).quotient_dimension()
