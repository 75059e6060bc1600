"""Lengths of quotients A/B of ideals of k[x_1..x_n] localized at the origin.

The local length is computed by m-adic truncation: for N large,
``length(A/B) = dim_k A/(B + m^N A)``, and ``B + m^N A = B + m^(N+1) A``
already forces every later truncation to agree (Nakayama), so one equality of
consecutive dimensions certifies the value.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Dict, List, Tuple

from .errors import PreconditionError
from .groebner import Ideal, ideal_product, ideal_sum
from .polynomial import Polynomial, PolyRing

Monomial = Tuple[int, ...]

DEFAULT_N_CAP = 60


@dataclass(frozen=True)
class LocalLengthResult:
    value: int
    truncation_level: int
    stabilized: bool

    def __int__(self) -> int:
        return self.value


_max_power_cache: Dict[Tuple[PolyRing, int], Ideal] = {}


def maximal_power(ring: PolyRing, n: int) -> Ideal:
    """m^n for m = (x_1..x_k), generated by all monomials of degree n."""
    key = (ring, n)
    ideal = _max_power_cache.get(key)
    if ideal is None:
        one = ring.field(1)
        monos = []
        for combo in combinations_with_replacement(range(ring.nvars), n):
            e = [0] * ring.nvars
            for i in combo:
                e[i] += 1
            monos.append(Polynomial(ring, {tuple(e): one}))
        ideal = _max_power_cache.setdefault(key, Ideal(ring, monos))
    return ideal


def _global_dim(ideal: Ideal) -> int:
    dim = ideal.vector_space_dimension()
    if dim is None:
        raise PreconditionError(f"R/{ideal} is not finite dimensional")
    return dim


def local_length(A: Ideal, B: Ideal, n_cap: int = DEFAULT_N_CAP, check: bool = True) -> LocalLengthResult:
    """length of (A/B) localized at the origin.

    R/A must be finite dimensional. ``check=False`` skips the B ⊆ A test for
    callers that build B inside A by construction.
    """
    if A.ring != B.ring:
        raise PreconditionError("ideals live in different rings")
    if check and not A.contains_ideal(B):
        raise PreconditionError(f"{B} is not contained in {A}")
    dim_a = _global_dim(A)
    if A.is_homogeneous() and B.is_homogeneous():
        # a homogeneous zero-dimensional B lives at the origin only
        dim_b = B.vector_space_dimension()
        if dim_b is not None:
            return LocalLengthResult(dim_b - dim_a, 0, True)

    def truncated(n: int) -> int:
        return _global_dim(ideal_sum(B, ideal_product(maximal_power(A.ring, n), A))) - dim_a

    n, value = 1, 0
    while n <= n_cap:
        value = truncated(n)
        if truncated(n + 1) == value:
            return LocalLengthResult(value, n, True)
        n *= 2
    return LocalLengthResult(value, n_cap, False)


def is_locally_m_primary(I: Ideal, n_cap: int = DEFAULT_N_CAP) -> bool:
    if I.is_zero() or any(g.constant_term() != 0 for g in I.gens):
        return False
    return local_length(Ideal.unit(I.ring), I, n_cap, check=False).stabilized


# --------------------------------------------------------------------------
# lattice-point oracle for monomial ideals


def _monomial_gens(ideal: Ideal) -> List[Monomial]:
    if not ideal.is_monomial():
        raise PreconditionError(f"{ideal} is not a monomial ideal")
    return [next(iter(g.terms)) for g in ideal.gens]


def _in_monomial_ideal(m: Monomial, gens: List[Monomial]) -> bool:
    return any(all(a <= b for a, b in zip(g, m)) for g in gens)


def _monomials_of_degree(n: int, d: int):
    if n == 0:
        if d == 0:
            yield ()
        return
    if n == 1:
        yield (d,)
        return
    for a in range(d, -1, -1):
        for rest in _monomials_of_degree(n - 1, d - a):
            yield (a,) + rest


def monomial_length_oracle(A: Ideal, B: Ideal, degree_cap: int = 400) -> int:
    """Number of monomials in A but not in B, by enumeration degree by degree.

    Once a degree beyond every generator of A contributes nothing, no higher
    degree can: such a monomial is a multiple of one of that degree in A.
    """
    a_gens, b_gens = _monomial_gens(A), _monomial_gens(B)
    if not all(_in_monomial_ideal(m, a_gens) for m in b_gens):
        raise PreconditionError(f"{B} is not contained in {A}")
    n = A.ring.nvars
    top = max((sum(m) for m in a_gens), default=0)
    total = 0
    for d in range(degree_cap + 1):
        count = sum(
            1 for m in _monomials_of_degree(n, d)
            if _in_monomial_ideal(m, a_gens) and not _in_monomial_ideal(m, b_gens)
        )
        total += count
        if count == 0 and d > top:
            return total
    raise PreconditionError("monomial quotient is not of finite length")
