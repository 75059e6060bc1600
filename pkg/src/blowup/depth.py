"""Depth of the associated graded ring and the depth statements it must satisfy.

gr_I(R) is presented as k[x, V_1..V_mu]/L where V_i stands for the initial
form of the generator b_i of I: L is the kernel of V_i -> t*b_i (the Rees
relations) plus I itself.  Depth is found by stacking generic linear forms in
the V variables while each one is a nonzerodivisor, tested by (L : l) = L.
"""
from __future__ import annotations

import random
from dataclasses import asdict, dataclass, field
from itertools import combinations_with_replacement
from typing import List, Optional, Sequence

from .bigraded import BigradedReport
from .errors import PreconditionError, UnsupportedInputError
from .groebner import Ideal, eliminate, ideal_colon, ideal_sum, standard_monomial_count
from .local_length import local_length
from .polynomial import Polynomial, PolyRing

DEFAULT_TRIALS = 4


@dataclass
class GrPresentation:
    base: PolyRing
    ambient: PolyRing
    relations: Ideal
    rees_kernel: Ideal
    d: int
    mu: int

    @property
    def v_variables(self) -> Sequence[str]:
        return self.ambient.variables[self.d:]

    def piece_dimension(self, n: int) -> int:
        """dim_k of the part of V-degree n of ambient/L."""
        lms = self.relations.leading_monomials()
        d, mu = self.d, self.mu
        total = 0
        for combo in combinations_with_replacement(range(mu), n):
            beta = [0] * mu
            for i in combo:
                beta[i] += 1
            # x-parts of leading monomials whose V-part divides V^beta
            xs = [m[:d] for m in lms if all(a <= b for a, b in zip(m[d:], beta))]
            count = standard_monomial_count(xs, d)
            if count is None:
                raise PreconditionError("presentation has an infinite graded piece")
            total += count
        return total


def _fresh_names(taken: Sequence[str], stem: str, count: int) -> List[str]:
    names = [f"{stem}{i}" for i in range(1, count + 1)]
    while set(names) & set(taken):
        names = [name + "_" for name in names]
    return names


def gr_presentation(I: Ideal) -> GrPresentation:
    """Presentation of gr_I(R); I must define the origin alone, globally."""
    ring = I.ring
    if I.is_zero() or any(g.constant_term() != 0 for g in I.gens):
        raise UnsupportedInputError(f"{I} is not contained in the maximal ideal")
    global_dim = I.vector_space_dimension()
    local = local_length(Ideal.unit(ring), I)
    if global_dim is None or not local.stabilized or local.value != global_dim:
        raise UnsupportedInputError(f"R/{I} is not supported at the origin alone")
    d, mu = ring.nvars, len(I.gens)
    v_names = _fresh_names(ring.variables, "V", mu)
    t_name = _fresh_names(ring.variables + tuple(v_names), "t", 1)[0]
    ambient = ring.extend(back=v_names)
    big = ambient.extend(front=[t_name])
    t = big.var(t_name)
    gens = [big.var(v) - t * b.embed(big, 1) for v, b in zip(v_names, I.gens)]
    kernel = eliminate(Ideal(big, gens), 1, ambient)
    relations = ideal_sum(kernel, Ideal(ambient, [b.embed(ambient, 0) for b in I.gens]))
    return GrPresentation(ring, ambient, relations, kernel, d, mu)


def is_regular_element(L: Ideal, ell: Polynomial) -> bool:
    """True iff ell is a nonzerodivisor modulo L, i.e. (L : ell) = L."""
    if L.contains(ell):
        raise PreconditionError(f"{ell} lies in the ideal")
    return L.contains_ideal(ideal_colon(L, ell))


@dataclass
class DepthResult:
    depth: int
    d: int
    regular_sequence: List[str]
    trials: List[dict] = field(default_factory=list)

    @property
    def is_cm(self) -> bool:
        return self.depth == self.d

    @property
    def rees_depth(self) -> Optional[int]:
        """depth(Rees(I)) = depth(gr) + 1 when gr is not Cohen-Macaulay; None otherwise."""
        return self.depth + 1 if self.depth < self.d else None

    def to_dict(self) -> dict:
        out = asdict(self)
        out["is_cm"] = self.is_cm
        out["rees_depth"] = self.rees_depth if self.rees_depth is not None else f">= {self.d}"
        return out


def _linear_form(pres: GrPresentation, coeffs) -> Polynomial:
    ring = pres.ambient
    ell = ring.zero()
    for c, name in zip(coeffs, pres.v_variables):
        ell = ell + ring.var(name).scale(c)
    return ell


def depth_gr(pres: GrPresentation, trials: int = DEFAULT_TRIALS, seed: int = 0) -> DepthResult:
    """Length of a regular sequence of generic linear forms, capped at d.

    A stage stops the search after ``trials`` failed draws, so the result can
    only under-report the depth.
    """
    rng = random.Random(seed)
    field_ = pres.ambient.field
    current = pres.relations
    sequence: List[str] = []
    transcript: List[dict] = []
    while len(sequence) < pres.d:
        found = False
        for attempt in range(trials):
            coeffs = [field_.random_element(rng) for _ in range(pres.mu)]
            ell = _linear_form(pres, coeffs)
            if current.contains(ell):
                regular = False
            else:
                regular = is_regular_element(current, ell)
            transcript.append({"stage": len(sequence), "attempt": attempt, "form": str(ell), "regular": regular})
            if regular:
                sequence.append(str(ell))
                current = ideal_sum(current, Ideal(pres.ambient, [ell]))
                found = True
                break
        if not found:
            break
    return DepthResult(len(sequence), pres.d, sequence, transcript)


# --------------------------------------------------------------------------
# depth statements


@dataclass(frozen=True)
class Verdict:
    name: str
    status: str  # PASS, FAIL or NOT-APPLICABLE
    detail: str


def _verdict(name: str, applicable: bool, holds: bool, detail: str) -> Verdict:
    if not applicable:
        return Verdict(name, "NOT-APPLICABLE", detail)
    return Verdict(name, "PASS" if holds else "FAIL", detail)


def verify_theorems(report: BigradedReport, depth: DepthResult) -> List[Verdict]:
    d, dep = report.d, depth.depth
    lam = report.column("lambda_p")
    cap = report.column("delta_cap_p")
    out = [
        _verdict("(a) Delta = 0 => depth = d", report.Delta == 0, dep == d,
                 f"Delta={report.Delta}, depth={dep}, d={d}"),
        _verdict("(b) delta = 0 => depth >= d-1", report.delta == 0, dep >= d - 1,
                 f"delta={report.delta}, depth={dep}"),
        _verdict("(c) delta_bar <= 1 => depth >= d-1-delta_bar", report.delta_bar <= 1,
                 dep >= d - 1 - report.delta_bar, f"delta_bar={report.delta_bar}, depth={dep}"),
        _verdict("(d) delta in {0,1} => depth >= d-1-delta", report.delta in (0, 1),
                 dep >= d - 1 - report.delta, f"delta={report.delta}, depth={dep}"),
        _verdict("(e) Delta_p <= 1 for p >= 1 => depth >= d-2", all(c <= 1 for c in cap[1:]),
                 dep >= d - 2, f"Delta_p={cap}, depth={dep}"),
    ]
    # (f): rows past the last computed one have Lambda_p = Delta_p = 0
    hits = []
    for t in range(1, len(lam)):
        eps = lam[t]
        if all(c == 0 for c in cap[1:t]) and eps <= min(1, d - 1):
            hits.append((t, eps))
    strongest = min((eps for _, eps in hits), default=None)
    out.append(_verdict(
        "(f) Delta_p = 0 for 1 <= p < t and Lambda_t = eps <= min(1, d-1) => depth >= d-1-eps",
        strongest is not None, strongest is not None and dep >= d - 1 - strongest,
        f"(t, eps)={hits}, depth={dep}",
    ))
    out.append(_verdict("(g) Lambda >= e_1 >= 0", True, report.Lambda >= report.e1 >= 0,
                        f"Lambda={report.Lambda}, e_1={report.e1}"))
    if depth.rees_depth is not None and report.delta_bar <= 1:
        out.append(_verdict("Rees: delta_bar <= 1 => depth(Rees) >= d-delta_bar", True,
                            depth.rees_depth >= d - report.delta_bar,
                            f"depth(Rees)={depth.rees_depth}, delta_bar={report.delta_bar}"))
    return out


def failures(verdicts: Sequence[Verdict]) -> List[Verdict]:
    return [v for v in verdicts if v.status == "FAIL"]
