"""Hilbert functions, integer polynomial fitting, Hilbert and Sally coefficients.

Polynomials are written in the alternating binomial basis

    P(X) = sum_j (-1)^j c_j * binom(X + dim - j - 1, dim - j - 1)

so that for the Hilbert function of I the c_j are the Hilbert coefficients.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable, List, Sequence, Tuple

from .errors import FittingError, InvariantViolation
from .filtration import PairContext
from .groebner import Ideal

SAMPLE_CAP = 80


def binomial_poly(x: int, k: int) -> int:
    """binom(x + k, k) as a polynomial in x, valid for every integer x."""
    num = 1
    for i in range(1, k + 1):
        num *= x + i
    return num // factorial(k)


@dataclass(frozen=True)
class SampledFunction:
    kind: str
    start: int
    values: Tuple[int, ...]

    @property
    def samples(self) -> List[Tuple[int, int]]:
        return [(self.start + k, v) for k, v in enumerate(self.values)]

    @property
    def stop(self) -> int:
        return self.start + len(self.values)

    def cumulative(self, kind: str) -> "SampledFunction":
        if self.start != 0:
            raise ValueError("cumulative sums need samples from 0")
        out, acc = [], 0
        for v in self.values:
            acc += v
            out.append(acc)
        return SampledFunction(kind, 0, tuple(out))


@dataclass(frozen=True)
class BinomialPolynomial:
    dim: int
    coefficients: Tuple[int, ...]
    postulation: int

    def __call__(self, n: int) -> int:
        d = self.dim
        return sum((-1) ** j * c * binomial_poly(n, d - j - 1) for j, c in enumerate(self.coefficients))

    @property
    def degree(self) -> int:
        """Degree as a polynomial; -1 for the zero polynomial."""
        for j, c in enumerate(self.coefficients):
            if c:
                return self.dim - 1 - j
        return -1


def _solve(rows: List[List[Fraction]], rhs: List[Fraction]) -> List[Fraction]:
    n = len(rhs)
    m = [row[:] + [b] for row, b in zip(rows, rhs)]
    for c in range(n):
        piv = next(r for r in range(c, n) if m[r][c] != 0)
        m[c], m[piv] = m[piv], m[c]
        for r in range(n):
            if r != c and m[r][c] != 0:
                f = m[r][c] / m[c][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    return [m[i][n] / m[i][i] for i in range(n)]


def _interpolate(points: Sequence[Tuple[int, int]], dim: int) -> BinomialPolynomial:
    rows = [[Fraction((-1) ** j * binomial_poly(n, dim - j - 1)) for j in range(dim)] for n, _ in points]
    sol = _solve(rows, [Fraction(v) for _, v in points])
    if any(c.denominator != 1 for c in sol):
        raise FittingError(f"non-integral coefficients {sol}")
    return BinomialPolynomial(dim, tuple(int(c) for c in sol), 0)


def fit_binomial_polynomial(f: SampledFunction, dim: int) -> BinomialPolynomial:
    """The eventual polynomial of degree < dim through the samples of f.

    The polynomial is read off the last ``dim`` samples; the postulation is
    the first index from which every sample agrees with it.  At least
    ``2 * (dim + 2)`` agreeing samples are required: a fitting window whose
    dim-th differences vanish and a disjoint window confirming the fit.
    """
    samples = f.samples
    need = 2 * (dim + 2)
    if dim == 0:
        if any(v for _, v in samples[-need:]) or len(samples) < need:
            raise FittingError("samples do not vanish")
        return BinomialPolynomial(0, (), next((n + 1 for n, v in reversed(samples) if v), f.start))
    if len(samples) < need:
        raise FittingError(f"{len(samples)} samples, need at least {need}")
    poly = _interpolate(samples[-dim:], dim)
    post = f.stop
    for n, v in reversed(samples):
        if poly(n) != v:
            break
        post = n
    if f.stop - post < need:
        raise FittingError(f"{f.kind}: only {f.stop - post} samples agree with the tail polynomial, need {need}")
    fit = [v for n, v in samples if post <= n < post + dim + 2]
    diffs = fit
    for _ in range(dim):
        diffs = [b - a for a, b in zip(diffs, diffs[1:])]
    if any(diffs):
        raise FittingError(f"{f.kind}: differences of order {dim} do not vanish on the fitting window")
    check = [(n, v) for n, v in samples if post + dim + 2 <= n < post + need]
    if any(poly(n) != v for n, v in check):
        raise FittingError(f"{f.kind}: verification window disagrees")
    return BinomialPolynomial(dim, poly.coefficients, post)


def fit_adaptively(
    sample: Callable[[int], SampledFunction], first_stop: int, dim: int
) -> Tuple[SampledFunction, BinomialPolynomial]:
    """Sample up to ``first_stop`` and extend the range until the fit succeeds."""
    stop = first_stop
    while True:
        f = sample(stop)
        try:
            return f, fit_binomial_polynomial(f, dim)
        except FittingError:
            if stop >= SAMPLE_CAP:
                raise
            stop = min(SAMPLE_CAP, stop + dim + 2)


# --------------------------------------------------------------------------
# Hilbert function of I


def hilbert_h0(ctx: PairContext, n: int) -> int:
    """length(I^n / I^(n+1))."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return ctx.length(ctx.I_power(n), ctx.I_power(n + 1))


def sample_range(ctx: PairContext) -> int:
    """Number of samples taken before any adaptive extension."""
    d, r = ctx.d, ctx.r
    return max(2 * d + 4, 2 * r + 2 * d + 4) + 1


def hilbert_samples(ctx: PairContext, stop: int) -> SampledFunction:
    return SampledFunction("hilbert_h0", 0, tuple(hilbert_h0(ctx, n) for n in range(stop)))


def hilbert_polynomials(ctx: PairContext):
    """(h0 samples, p^0 fit, h1 samples, p^1 fit)."""
    stop = sample_range(ctx)
    while True:
        h0, p0 = fit_adaptively(lambda s: hilbert_samples(ctx, s), stop, ctx.d)
        h1 = h0.cumulative("hilbert_h1")
        try:
            p1 = fit_binomial_polynomial(h1, ctx.d + 1)
            return h0, p0, h1, p1
        except FittingError:
            if h0.stop >= SAMPLE_CAP:
                raise
            stop = min(SAMPLE_CAP, h0.stop + ctx.d + 3)


def hilbert_coefficients(ctx: PairContext) -> Tuple[int, ...]:
    """(e_0, ..., e_d); e_d comes from the cumulative Hilbert function."""
    _, p0, _, p1 = hilbert_polynomials(ctx)
    if p1.coefficients[: ctx.d] != p0.coefficients:
        raise InvariantViolation(f"p^0 coefficients {p0.coefficients} disagree with p^1 {p1.coefficients}")
    e = p1.coefficients
    colength = ctx.length(Ideal.unit(ctx.ring), ctx.J)
    if e[0] != colength:
        raise InvariantViolation(f"e_0 = {e[0]} but length(R/J) = {colength}")
    return e


# --------------------------------------------------------------------------
# Sally module


def sally_length(ctx: PairContext, n: int) -> int:
    """length(I^(n+1) / J^n I) for n >= 1."""
    if n < 1:
        raise ValueError("the Sally module starts in degree 1")
    return ctx.length(ctx.I_power(n + 1), ctx.mixed(n, 1))


def sally_samples(ctx: PairContext, stop: int) -> SampledFunction:
    return SampledFunction("sally", 1, tuple(sally_length(ctx, n) for n in range(1, stop)))


def sally_is_zero(ctx: PairContext) -> bool:
    # the Sally module is generated in degree 1, so it vanishes iff I^2 = J I
    return ctx.r <= 1


def sally_coefficients(ctx: PairContext) -> Tuple[int, ...]:
    """(s_0, ..., s_{d-1}); all zero when the Sally module vanishes."""
    if sally_is_zero(ctx):
        return (0,) * ctx.d
    _, poly = fit_adaptively(lambda s: sally_samples(ctx, s), sample_range(ctx) + 1, ctx.d)
    return poly.coefficients
