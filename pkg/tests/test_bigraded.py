from itertools import product
from math import comb

import pytest

from blowup.bigraded import (
    BigradedReport,
    antidiagonal_total,
    build_report,
    delta_cap_p,
    delta_p,
    e0_sigma_p,
    k_piece_length,
    lambda_p,
    sigma_piece_length,
)
from blowup.errors import InvariantViolation
from blowup.filtration import PairContext
from blowup.groebner import Ideal
from blowup.polynomial import PolyRing, QQ


# -- a self-contained lattice-point model of monomial ideals --------------------


def _minimal(gens):
    gens = sorted(set(gens), key=sum)
    out = []
    for g in gens:
        if not any(all(a <= b for a, b in zip(h, g)) for h in out):
            out.append(g)
    return out


def _mul(A, B):
    return _minimal(tuple(a + b for a, b in zip(f, g)) for f in A for g in B)


def _pow(A, n, nvars):
    out = [(0,) * nvars]
    for _ in range(n):
        out = _mul(out, A)
    return out


def _meet(A, B):
    return _minimal(tuple(max(a, b) for a, b in zip(f, g)) for f in A for g in B)


def _inside(m, gens):
    return any(all(a <= b for a, b in zip(g, m)) for g in gens)


def _count(A, B, nvars):
    """Monomials in A outside B; B contains every monomial past the box bound."""
    bound = max(max(g) for g in B) + max(sum(g) for g in A) + 1
    return sum(
        1 for m in product(range(bound + 1), repeat=nvars) if _inside(m, A) and not _inside(m, B)
    )


def _oracle_rows(I, J, nvars, r, samples):
    rows = []
    for p in range(r):
        Ip, Ip1 = _pow(I, p, nvars), _pow(I, p + 1, nvars)
        lam = _count(Ip1, _mul(J, Ip), nvars)
        cap = _count(_meet(Ip1, J), _mul(J, Ip), nvars) if p else 0
        sig = [_count(_mul(_pow(J, i, nvars), Ip1), _mul(_pow(J, i + 1, nvars), Ip), nvars) for i in range(samples)]
        # leading coefficient from the (d-1)-th differences at the end of the range
        diffs = sig
        for _ in range(nvars - 1):
            diffs = [b - a for a, b in zip(diffs, diffs[1:])]
        rows.append((lam, cap, diffs[-1], lam - diffs[-1], sig))
    return rows


MONOMIAL_PAIRS = {
    "e2": (["x", "y"], [(2, 0), (1, 1), (0, 2)], [(2, 0), (0, 2)]),
    "e3": (["x", "y"], [(4, 0), (3, 1), (1, 3), (0, 4)], [(4, 0), (0, 4)]),
    "mixed": (["x", "y"], [(2, 0), (1, 2), (0, 4)], [(2, 0), (0, 4)]),
    "squares3": (["x", "y", "z"], [(2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 1)], [(2, 0, 0), (0, 2, 0), (0, 0, 2)]),
}


def _context(name):
    names, I, J = MONOMIAL_PAIRS[name]
    R = PolyRing(names, QQ)
    return PairContext.from_pair(Ideal(R, [R.monomial(e) for e in I]), Ideal(R, [R.monomial(e) for e in J]))


@pytest.mark.parametrize("name", sorted(MONOMIAL_PAIRS))
def test_rows_match_lattice_oracle(name):
    names, I, J = MONOMIAL_PAIRS[name]
    ctx = _context(name)
    report = build_report(ctx)
    oracle = _oracle_rows(I, J, len(names), ctx.r, 6 if len(names) == 2 else 5)
    for row, (lam, cap, e0, dp, sig) in zip(report.rows, oracle):
        assert (row.lambda_p, row.delta_cap_p, row.e0_sigma_p, row.delta_p) == (lam, cap, e0, dp)
        assert row.sigma[: len(sig)] == sig


@pytest.fixture
def e2():
    return _context("e2")


@pytest.fixture
def e3():
    return _context("e3")


def test_e2_values(e2):
    assert lambda_p(e2, 0) == 1 and lambda_p(e2, 1) == 0 and lambda_p(e2, 2) == 0
    assert delta_cap_p(e2, 0) == 0 and delta_cap_p(e2, 1) == 0
    assert [sigma_piece_length(e2, 0, i) for i in range(4)] == [1, 2, 3, 4]
    assert e0_sigma_p(e2, 0) == 1
    assert delta_p(e2, 0) == 0 and delta_p(e2, 1) == 0
    assert all(k_piece_length(e2, 0, i) == 0 for i in range(4))


def test_e2_antidiagonal(e2):
    # m = 3: sigma(0, 2) against sally(2) + length(I J^2 / J^3)
    assert antidiagonal_total(e2, 3) == 3
    assert antidiagonal_total(e2, 1) == lambda_p(e2, 0)


def test_e3_kernel_pieces(e3):
    assert delta_cap_p(e3, 1) >= 1
    assert any(k_piece_length(e3, 1, i) > 0 for i in range(4))
    assert delta_p(e3, 1) == 1


def test_rows_past_r_vanish(e3):
    assert lambda_p(e3, e3.r) == 0 and lambda_p(e3, e3.r + 1) == 0
    assert all(sigma_piece_length(e3, e3.r, i) == 0 for i in range(3))
    assert e0_sigma_p(e3, e3.r) == 0


def test_trivial_pair_report(R2):
    m = Ideal(R2, R2.gens())
    report = build_report(PairContext.from_pair(m, m))
    assert report.r == 0
    assert (report.Lambda, report.Delta, report.delta, report.delta_bar) == (0, 0, 0, 0)
    assert report.e_coeffs == [1, 0, 0]
    assert all(row.lambda_p == row.delta_cap_p == row.delta_p == 0 for row in report.rows)
    assert antidiagonal_total(PairContext.from_pair(m, m), 2) == 0


def test_e2_report(e2):
    rep = build_report(e2)
    assert (rep.e_coeffs[0], rep.e1, rep.Lambda, rep.Delta, rep.delta, rep.delta_bar, rep.r) == (4, 1, 1, 0, 0, 0, 1)
    assert rep.e1 == rep.rows[0].e0_sigma_p


def test_e3_report(e3):
    rep = build_report(e3)
    assert rep.e_coeffs == [16, 6, 0]
    assert rep.column("lambda_p") == [5, 2, 0]
    assert rep.column("delta_cap_p") == [0, 2, 0]
    assert rep.column("e0_sigma_p") == [5, 1, 0]
    assert rep.column("delta_p") == [0, 1, 0]
    assert (rep.Lambda, rep.Delta, rep.delta, rep.delta_bar) == (7, 2, 1, 1)
    assert rep.s_coeffs == [1, 0]


def test_pmax_adds_zero_rows(e2):
    rep = build_report(e2, p_max=3)
    assert len(rep.rows) == 4
    assert all(row.lambda_p == 0 for row in rep.rows[1:])


def test_negative_kernel_piece_aborts(e2):
    with pytest.raises(InvariantViolation):
        k_piece_length(e2, 0, 1, lam=0, sigma=1)


def test_report_dict_round_trip(e3):
    rep = build_report(e3)
    again = BigradedReport.from_dict(rep.to_dict())
    assert again == rep
    data = rep.to_dict()
    for key in ("lambda_p", "delta_cap_p", "delta_p", "e0_sigma_p", "e_coeffs", "delta_bar"):
        assert key in data


def test_sigma_zero_row_formula(e3):
    rep = build_report(e3)
    lam0 = rep.rows[0].lambda_p
    assert all(v == lam0 * comb(i + 1, 1) for i, v in enumerate(rep.rows[0].sigma))
