"""The pair (I, J): reduction checks, reduction numbers and random minimal reductions."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .errors import GenerationFailure, InvariantViolation, PreconditionError
from .groebner import Ideal, ideal_product
from .local_length import LocalLengthResult, is_locally_m_primary, local_length

DEFAULT_R_MAX = 30
DEFAULT_RETRIES = 5
SCALAR_BOUND = 10_000


def _length(A: Ideal, B: Ideal) -> LocalLengthResult:
    return local_length(A, B, check=False)


class Ladder:
    """Memoized products J^i * I^p, with I^p and J^i as the special cases."""

    def __init__(self, I: Ideal, J: Ideal):
        self.I = I
        self.J = J
        self._cache: Dict[Tuple[int, int], Ideal] = {(0, 0): Ideal.unit(I.ring)}

    def mixed(self, i: int, p: int) -> Ideal:
        if i < 0 or p < 0:
            raise ValueError("exponents must be non-negative")
        key = (i, p)
        ideal = self._cache.get(key)
        if ideal is None:
            if i > 0:
                ideal = ideal_product(self.J, self.mixed(i - 1, p))
            else:
                ideal = ideal_product(self.I, self.mixed(0, p - 1))
            ideal = self._cache.setdefault(key, ideal)
        return ideal

    def I_power(self, n: int) -> Ideal:
        return self.mixed(0, n)

    def J_power(self, n: int) -> Ideal:
        return self.mixed(n, 0)


def _check_nested(I: Ideal, J: Ideal):
    if I.ring != J.ring:
        raise PreconditionError("I and J live in different rings")
    if not I.contains_ideal(J):
        raise PreconditionError(f"J = {J} is not contained in I = {I}")


def _reduction_number(ladder: Ladder, r_max: int) -> Optional[int]:
    for r in range(r_max + 1):
        gap = _length(ladder.I_power(r + 1), ideal_product(ladder.J, ladder.I_power(r)))
        if gap.stabilized and gap.value == 0:
            nxt = _length(ladder.I_power(r + 2), ideal_product(ladder.J, ladder.I_power(r + 1)))
            if not (nxt.stabilized and nxt.value == 0):
                raise InvariantViolation(f"I^{r + 1} = J I^{r} but I^{r + 2} != J I^{r + 1}")
            return r
    return None


def verify_reduction(I: Ideal, J: Ideal, r_max: int = DEFAULT_R_MAX) -> Optional[int]:
    """Least r <= r_max with I^(r+1) = J I^r locally, or None."""
    _check_nested(I, J)
    return _reduction_number(Ladder(I, J), r_max)


@dataclass
class PairContext:
    """A locally m-primary ideal I with a verified minimal reduction J.

    Build with :meth:`from_pair` or :func:`generate_minimal_reduction`.
    """

    I: Ideal
    J: Ideal
    d: int
    r: int
    rng_seed: Optional[int] = None
    ladder: Ladder = field(repr=False, default=None)
    transcript: List[dict] = field(default_factory=list, repr=False)

    def __post_init__(self):
        if self.ladder is None:
            self.ladder = Ladder(self.I, self.J)

    @classmethod
    def from_pair(cls, I: Ideal, J: Ideal, r_max: int = DEFAULT_R_MAX, seed: Optional[int] = None) -> "PairContext":
        _check_nested(I, J)
        d = I.ring.nvars
        if len(J.gens) != d:
            raise PreconditionError(f"J must have exactly d = {d} generators, got {len(J.gens)}")
        if not is_locally_m_primary(I):
            raise PreconditionError(f"I = {I} is not m-primary")
        ladder = Ladder(I, J)
        r = _reduction_number(ladder, r_max)
        if r is None:
            raise PreconditionError(f"J is not a reduction of I with reduction number <= {r_max}")
        return cls(I, J, d, r, seed, ladder)

    @property
    def ring(self):
        return self.I.ring

    def mixed(self, i: int, p: int) -> Ideal:
        """J^i I^p."""
        return self.ladder.mixed(i, p)

    def I_power(self, n: int) -> Ideal:
        return self.ladder.I_power(n)

    def J_power(self, n: int) -> Ideal:
        return self.ladder.J_power(n)

    def length(self, A: Ideal, B: Ideal) -> int:
        """Local length of A/B for B built inside A; aborts if it does not stabilize."""
        res = _length(A, B)
        if not res.stabilized:
            raise InvariantViolation(f"length of {A} / {B} did not stabilize")
        return res.value


def generate_minimal_reduction(
    I: Ideal, seed: int, r_max: int = DEFAULT_R_MAX, retries: int = DEFAULT_RETRIES
) -> PairContext:
    """J generated by d random scalar combinations of the generators of I."""
    ring = I.ring
    d = ring.nvars
    if d < 1:
        raise PreconditionError("ambient dimension must be at least 1")
    if not is_locally_m_primary(I):
        raise PreconditionError(f"I = {I} is not m-primary")
    rng = random.Random(seed)
    transcript = []
    for attempt in range(retries):
        coeffs = [[ring.field.random_element(rng, SCALAR_BOUND) for _ in I.gens] for _ in range(d)]
        gens = []
        for row in coeffs:
            f = ring.zero()
            for c, b in zip(row, I.gens):
                f = f + b.scale(c)
            gens.append(f)
        J = Ideal(ring, gens)
        entry = {"attempt": attempt, "coefficients": [[str(c) for c in row] for row in coeffs]}
        transcript.append(entry)
        if len(J.gens) != d:
            entry["outcome"] = "degenerate"
            continue
        ladder = Ladder(I, J)
        r = _reduction_number(ladder, r_max)
        entry["outcome"] = "accepted" if r is not None else "not a reduction"
        if r is not None:
            entry["r"] = r
            return PairContext(I, J, d, r, seed, ladder, transcript)
    raise GenerationFailure(f"no reduction found in {retries} attempts", transcript)
