"""Diagonal invariants of the pair (I, J) and the assembled invariant report.

Row p collects the lengths sigma(p, i) = length(J^i I^(p+1) / J^(i+1) I^p).
Rows with p >= r vanish because I^(p+1) = J I^p there.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass, field
from math import comb
from typing import Dict, List, Optional, Tuple

from .errors import InvariantViolation, PreconditionError
from .filtration import PairContext
from .groebner import ideal_intersection
from .hilbert import (
    SampledFunction,
    fit_adaptively,
    fit_binomial_polynomial,
    hilbert_polynomials,
    sally_coefficients,
    sally_is_zero,
    sally_length,
    sample_range,
)
from .groebner import Ideal


def lambda_p(ctx: PairContext, p: int) -> int:
    """length(I^(p+1) / J I^p)."""
    return ctx.length(ctx.I_power(p + 1), ctx.mixed(1, p))


def delta_cap_p(ctx: PairContext, p: int) -> int:
    """length((I^(p+1) ∩ J) / J I^p); zero at p = 0 since J ⊆ I."""
    if p < 0:
        raise ValueError("p must be non-negative")
    if p == 0:
        return 0
    meet = ideal_intersection(ctx.I_power(p + 1), ctx.J)
    return ctx.length(meet, ctx.mixed(1, p))


def sigma_piece_length(ctx: PairContext, p: int, i: int) -> int:
    return ctx.length(ctx.mixed(i, p + 1), ctx.mixed(i + 1, p))


def sigma_samples(ctx: PairContext, p: int, stop: int) -> SampledFunction:
    return SampledFunction(f"sigma_diagonal({p})", 0, tuple(sigma_piece_length(ctx, p, i) for i in range(stop)))


def k_piece_length(ctx: PairContext, p: int, i: int, lam: Optional[int] = None, sigma: Optional[int] = None) -> int:
    lam = lambda_p(ctx, p) if lam is None else lam
    sigma = sigma_piece_length(ctx, p, i) if sigma is None else sigma
    k = lam * comb(i + ctx.d - 1, ctx.d - 1) - sigma
    if k < 0:
        raise InvariantViolation(f"k_piece_length({p}, {i}) = {k} < 0")
    return k


def _sigma_fit(ctx: PairContext, p: int, stop: int):
    return fit_adaptively(lambda s: sigma_samples(ctx, p, s), stop, ctx.d)


def e0_sigma_p(ctx: PairContext, p: int) -> int:
    """Leading coefficient of the diagonal p, or 0 if its degree is below d - 1."""
    if p >= ctx.r:
        return 0
    _, poly = _sigma_fit(ctx, p, sample_range(ctx))
    return poly.coefficients[0]


def delta_p(ctx: PairContext, p: int) -> int:
    value = lambda_p(ctx, p) - e0_sigma_p(ctx, p)
    cap = delta_cap_p(ctx, p)
    if not 0 <= value <= cap:
        raise InvariantViolation(f"delta_{p} = {value} outside [0, Delta_{p} = {cap}]")
    return value


def antidiagonal_total(ctx: PairContext, m: int, sigma: Optional[Dict[Tuple[int, int], int]] = None) -> int:
    """Sum of sigma(p, m-1-p) over p < m, checked against the Sally-module split."""
    if m < 1:
        raise ValueError("m must be at least 1")

    def s(p, i):
        if sigma is not None and (p, i) in sigma:
            return sigma[(p, i)]
        return sigma_piece_length(ctx, p, i)

    total = sum(s(p, m - 1 - p) for p in range(min(m, ctx.r)))
    sally = sally_length(ctx, m - 1) if m >= 2 else 0
    split = sally + ctx.length(ctx.mixed(m - 1, 1), ctx.J_power(m))
    if total != split:
        raise InvariantViolation(f"antidiagonal m={m}: {total} != {sally} + length(I J^{m - 1} / J^{m})")
    return total


# --------------------------------------------------------------------------
# the report


@dataclass
class Row:
    p: int
    lambda_p: int
    delta_cap_p: int
    e0_sigma_p: int
    delta_p: int
    sigma: List[int]
    k_piece: List[int]


@dataclass
class BigradedReport:
    d: int
    r: int
    e_coeffs: List[int]
    s_coeffs: List[int]
    rows: List[Row]
    Lambda: int
    Delta: int
    delta: int
    delta_bar: int
    hilbert_h0: List[int]
    sally: List[int]
    antidiagonal: List[int]
    postulation: Dict[str, int]
    identities: List[str] = field(default_factory=list)

    @property
    def e1(self) -> int:
        return self.e_coeffs[1] if len(self.e_coeffs) > 1 else 0

    def column(self, key: str) -> List[int]:
        return [getattr(row, key) for row in self.rows]

    def to_dict(self) -> dict:
        out = asdict(self)
        out["lambda_p"] = self.column("lambda_p")
        out["delta_cap_p"] = self.column("delta_cap_p")
        out["delta_p"] = self.column("delta_p")
        out["e0_sigma_p"] = self.column("e0_sigma_p")
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "BigradedReport":
        data = {k: v for k, v in data.items() if k in cls.__dataclass_fields__}
        data["rows"] = [Row(**row) for row in data["rows"]]
        return cls(**data)


def _require(ok: bool, name: str, detail: str, checked: List[str]):
    if not ok:
        raise InvariantViolation(f"{name} failed: {detail}")
    checked.append(name)


def build_report(ctx: PairContext, p_max: Optional[int] = None) -> BigradedReport:
    """All rows 0 <= p <= max(r, p_max), aggregates and checked identities.

    Rows p >= r are probes that must come out zero.
    """
    d, r = ctx.d, ctx.r
    checked: List[str] = []
    h0, p0, h1, p1 = hilbert_polynomials(ctx)
    e = list(p1.coefficients)
    _require(list(p0.coefficients) == e[:d], "cumulative Hilbert fit", f"{p0.coefficients} vs {e}", checked)
    colength = ctx.length(Ideal.unit(ctx.ring), ctx.J)
    _require(e[0] == colength, "e_0 = length(R/J)", f"{e[0]} != {colength}", checked)

    stop = max(sample_range(ctx), h0.stop)
    sigma: Dict[Tuple[int, int], int] = {}
    rows: List[Row] = []
    last = r if p_max is None else max(r, p_max)
    for p in range(last + 1):
        lam = lambda_p(ctx, p)
        cap = delta_cap_p(ctx, p)
        if p < r:
            samples, poly = _sigma_fit(ctx, p, stop)
            stop = max(stop, samples.stop)
            values = list(samples.values)
            e0s = poly.coefficients[0]
        else:
            _require(lam == 0 and cap == 0, f"row {p} vanishes", f"Lambda={lam}, Delta={cap}", checked)
            values, e0s = [lam], 0
        for i, v in enumerate(values):
            sigma[(p, i)] = v
        _require(values[0] == lam, f"sigma({p}, 0) = Lambda_{p}", f"{values[0]} != {lam}", checked)
        k = [k_piece_length(ctx, p, i, lam, v) for i, v in enumerate(values)]
        checked.append(f"k pieces of row {p} non-negative")
        dp = lam - e0s
        _require(0 <= dp <= cap, f"0 <= delta_{p} <= Delta_{p}", f"delta={dp}, Delta={cap}", checked)
        rows.append(Row(p, lam, cap, e0s, dp, values, k))

    # every row sampled to the same length, for the antidiagonals
    for row in rows[:r]:
        while len(row.sigma) < stop:
            i = len(row.sigma)
            v = sigma_piece_length(ctx, row.p, i)
            sigma[(row.p, i)] = v
            row.sigma.append(v)
            row.k_piece.append(k_piece_length(ctx, row.p, i, row.lambda_p, v))

    if r > 0:
        lam0 = rows[0].lambda_p
        _require(
            all(v == lam0 * comb(i + d - 1, d - 1) for i, v in enumerate(rows[0].sigma)),
            "sigma(0, i) = Lambda_0 binom(i+d-1, d-1)", str(rows[0].sigma), checked,
        )
    _require(rows[0].delta_p == 0, "delta_0 = 0", str(rows[0].delta_p), checked)

    Lambda = sum(row.lambda_p for row in rows)
    Delta = sum(row.delta_cap_p for row in rows if row.p >= 1)
    delta = sum(row.delta_p for row in rows)
    delta_bar = max(row.delta_p for row in rows)
    e1 = e[1] if d >= 1 else 0
    _require(e1 == sum(row.e0_sigma_p for row in rows), "e_1 = sum of e0_sigma_p",
             f"{e1} vs {[row.e0_sigma_p for row in rows]}", checked)
    _require(delta == Lambda - e1 and delta >= 0, "delta = Lambda - e_1 >= 0",
             f"delta={delta}, Lambda={Lambda}, e_1={e1}", checked)

    anti = [antidiagonal_total(ctx, m, sigma) for m in range(1, stop + 1)]
    checked.append("antidiagonal split")
    anti_fn = SampledFunction("antidiagonal", 0, tuple(anti))
    anti_poly = fit_binomial_polynomial(anti_fn, d)
    _require(list(anti_poly.coefficients) == e[1:], "antidiagonal polynomial has coefficients e_1..e_d",
             f"{anti_poly.coefficients} vs {e[1:]}", checked)

    s = list(sally_coefficients(ctx))
    if sally_is_zero(ctx):
        sally_values = [0] * (stop - 1)
    else:
        sally_values = [sally_length(ctx, n) for n in range(1, stop)]
    _require(s[0] == e1 - rows[0].lambda_p, "s_0 = e_1 - length(I/J)", f"s={s}, e={e}", checked)
    _require(s[1:] == e[2:], "s_i = e_(i+1)", f"s={s}, e={e}", checked)

    return BigradedReport(
        d=d, r=r, e_coeffs=e, s_coeffs=s, rows=rows,
        Lambda=Lambda, Delta=Delta, delta=delta, delta_bar=delta_bar,
        hilbert_h0=list(h0.values), sally=sally_values, antidiagonal=anti,
        postulation={"hilbert_h0": p0.postulation, "hilbert_h1": p1.postulation, "antidiagonal": anti_poly.postulation},
        identities=checked,
    )
