"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -v``.
"""
import random
import subprocess
import sys
import time
from contextlib import contextmanager
from itertools import product
from math import comb

import pytest

from blowup.bigraded import build_report
from blowup.depth import depth_gr, failures, gr_presentation, verify_theorems
from blowup.groebner import (
    Ideal,
    buchberger,
    ideal_colon,
    ideal_intersection,
    is_groebner_basis,
    is_reduced_basis,
    normal_form,
)
from blowup.hilbert import hilbert_coefficients
from blowup.local_length import local_length, monomial_length_oracle
from blowup.polynomial import GF, PolyRing, QQ
from blowup.report import build_context, corpus_names, corpus_problem

from conftest import random_polynomial

CORPUS = ("trivial", "e2", "e3", "mixed", "squares3", "cube2")
BUILD_SECONDS = {}


@contextmanager
def criterion(capsys, number, title, budget=None):
    start = time.perf_counter()
    try:
        yield
        elapsed = time.perf_counter() - start
        if budget is not None:
            assert elapsed < budget, f"took {elapsed:.1f}s, budget {budget}s"
    except BaseException:
        with capsys.disabled():
            print(f"\ncriterion {number} FAIL: {title}")
        raise
    with capsys.disabled():
        print(f"\ncriterion {number} PASS: {title} ({time.perf_counter() - start:.1f}s)")


@pytest.fixture(scope="module")
def corpus():
    """Context, report and depth for each corpus pair, computed once."""
    out = {}
    start = time.perf_counter()
    for name in CORPUS:
        spec = corpus_problem(name)
        ctx = build_context(spec, seed=spec.seed or 0)
        report = build_report(ctx, spec.pmax)
        out[name] = (ctx, report)
    BUILD_SECONDS["corpus"] = time.perf_counter() - start
    return out


@pytest.fixture(scope="module")
def depths(corpus):
    return {name: depth_gr(gr_presentation(ctx.I)) for name, (ctx, _) in corpus.items()}


# -- 1 ------------------------------------------------------------------------


def _lattice_count(A, B, nvars, bound):
    def inside(m, gens):
        return any(all(a <= b for a, b in zip(g, m)) for g in gens)

    return sum(1 for m in product(range(bound + 1), repeat=nvars) if inside(m, A) and not inside(m, B))


def _nested_pair(rng):
    n = rng.randint(1, 3)
    A = [tuple(rng.randint(1, 6) if j == i else 0 for j in range(n)) for i in range(n)]
    for _ in range(rng.randint(0, 3)):
        e = [0] * n
        for _ in range(rng.randint(1, 6)):
            e[rng.randrange(n)] += 1
        A.append(tuple(e))
    B = [tuple(rng.randint(A[i][i], 6) if j == i else 0 for j in range(n)) for i in range(n)]
    while len(B) < n + 3:
        e = [0] * n
        for _ in range(rng.randint(1, 6)):
            e[rng.randrange(n)] += 1
        if any(all(a <= b for a, b in zip(g, e)) for g in A):
            B.append(tuple(e))
    return n, A, B


def test_criterion_1_oracle_equivalence(capsys):
    with criterion(capsys, 1, "local_length equals the monomial oracle on 200 nested pairs", budget=60):
        rng = random.Random(2024)
        rings = {n: PolyRing(["x", "y", "z"][:n], QQ) for n in (1, 2, 3)}
        for _ in range(200):
            n, A, B = _nested_pair(rng)
            R = rings[n]
            IA, IB = Ideal(R, [R.monomial(e) for e in A]), Ideal(R, [R.monomial(e) for e in B])
            res = local_length(IA, IB)
            oracle = monomial_length_oracle(IA, IB)
            assert res.stabilized
            assert res.value == oracle == _lattice_count(A, B, n, 6), (A, B)


# -- 2 ------------------------------------------------------------------------


def _binomial_basis(coeffs, x, dim):
    return sum((-1) ** j * c * comb(x + dim - j - 1, dim - j - 1) for j, c in enumerate(coeffs))


def test_criterion_2_identity_suite(capsys, corpus):
    assert set(CORPUS) <= set(corpus_names())
    # the reports themselves are built by the fixture; charge that time here
    with criterion(capsys, 2, f"identity suite on the corpus, reports built in {BUILD_SECONDS['corpus']:.1f}s", budget=120 - BUILD_SECONDS["corpus"]):
        for name, (ctx, rep) in corpus.items():
            d, e = rep.d, rep.e_coeffs
            assert e[0] == local_length(Ideal.unit(ctx.ring), ctx.J).value, name
            assert rep.e1 == sum(rep.column("e0_sigma_p")), name
            assert rep.delta == rep.Lambda - rep.e1 >= 0, name
            for row in rep.rows:
                assert row.delta_cap_p >= row.delta_p >= 0, (name, row.p)
                assert row.delta_p == row.lambda_p - row.e0_sigma_p
                assert all(k >= 0 for k in row.k_piece)
                assert row.k_piece == [row.lambda_p * comb(i + d - 1, d - 1) - s for i, s in enumerate(row.sigma)]
            assert rep.rows[0].delta_p == 0
            assert rep.rows[0].sigma == [rep.rows[0].lambda_p * comb(i + d - 1, d - 1) for i in range(len(rep.rows[0].sigma))]
            # antidiagonals from the rows, against the Sally-module split and the polynomial
            for m, total in enumerate(rep.antidiagonal, 1):
                assert total == sum(rep.rows[p].sigma[m - 1 - p] for p in range(min(m, rep.r))), (name, m)
                if m <= 4:
                    sally = local_length(ctx.I_power(m), ctx.mixed(m - 1, 1)).value if m >= 2 else 0
                    assert total == sally + local_length(ctx.mixed(m - 1, 1), ctx.J_power(m)).value
                if m - 1 >= rep.postulation["antidiagonal"]:
                    assert total == _binomial_basis(e[1:], m - 1, d), (name, m)
            for n, h in enumerate(rep.hilbert_h0):
                if n >= rep.postulation["hilbert_h0"]:
                    assert h == _binomial_basis(e[:d], n, d), (name, n)
            if rep.r >= 2:
                assert rep.s_coeffs[0] == rep.e1 - rep.rows[0].lambda_p
                assert rep.s_coeffs[1:] == e[2:]
            else:
                assert all(v == 0 for v in rep.sally)


# -- 3 ------------------------------------------------------------------------


def test_criterion_3_fixture_values(capsys, corpus, depths):
    with criterion(capsys, 3, "E2 and trivial-pair fixture values"):
        rep = corpus["e2"][1]
        assert (rep.e_coeffs[0], rep.e1, rep.Lambda, rep.Delta, rep.delta, rep.delta_bar, rep.r) == (4, 1, 1, 0, 0, 0, 1)
        assert depths["e2"].depth == 2
        triv = corpus["trivial"][1]
        assert (triv.Lambda, triv.Delta, triv.delta, triv.delta_bar, triv.r, triv.e1) == (0, 0, 0, 0, 0, 0)
        assert all(row.lambda_p == row.delta_cap_p == row.e0_sigma_p == row.delta_p == 0 for row in triv.rows)
        assert depths["trivial"].depth == 2


# -- 4 ------------------------------------------------------------------------


def test_criterion_4_theorem_predicates(capsys, corpus, depths):
    with criterion(capsys, 4, "no depth statement fails on the corpus"):
        for name, (_, rep) in corpus.items():
            assert failures(verify_theorems(rep, depths[name])) == [], name
            if rep.Delta == 0:
                assert depths[name].depth == rep.d, name


# -- 5 ------------------------------------------------------------------------


def test_criterion_5_groebner_certification(capsys):
    with criterion(capsys, 5, "Groebner certificate, uniqueness and soundness on 100 ideals", budget=60):
        rng = random.Random(55)
        rings = [PolyRing(["x", "y", "z"][:n], field) for n in (2, 3) for field in (QQ, GF(32003))]

        def poly(R, deg, terms):
            # no constant term, so the ideal is rarely the unit ideal
            f = random_polynomial(rng, R, max_deg=deg, terms=terms)
            return f - R.constant(f.constant_term())

        done = 0
        while done < 100:
            R = rings[done % len(rings)]
            gens = [g for g in (poly(R, 5, 3) for _ in range(rng.randint(2, 4))) if not g.is_zero()]
            if not gens:
                continue
            gb = buchberger(gens)
            assert is_groebner_basis(gb) and is_reduced_basis(gb)
            shuffled = gens[::-1]
            rng.shuffle(shuffled)
            assert buchberger(shuffled) == gb
            assert all(normal_form(g, gb).is_zero() for g in gens)
            done += 1
        # soundness, on smaller inputs since elimination is the costly step
        for k in range(20):
            R = rings[k % len(rings)]
            A = Ideal(R, [poly(R, 3, 2) for _ in range(2)])
            B = Ideal(R, [poly(R, 3, 2) for _ in range(2)])
            meet = ideal_intersection(A, B)
            assert A.contains_ideal(meet) and B.contains_ideal(meet)
            prod = Ideal(R, [f * g for f in A.gens for g in B.gens])
            assert meet.contains_ideal(prod)
            f = poly(R, 2, 2)
            if f.is_zero():
                continue
            Q = ideal_colon(A, f)
            assert all(A.contains(q * f) for q in Q.gens)
            assert Q.contains_ideal(A)


# -- 6 ------------------------------------------------------------------------


def test_criterion_6_reduction_independence(capsys, corpus):
    with criterion(capsys, 6, "Hilbert coefficients of (x,y,z)^2 agree for two seeds"):
        spec = corpus_problem("cube2")
        first = corpus["cube2"][0]
        other = build_context(spec, seed=(spec.seed or 0) + 1)
        assert [str(g) for g in first.J.gens] != [str(g) for g in other.J.gens]
        e_first, e_other = hilbert_coefficients(first), hilbert_coefficients(other)
        assert e_first == e_other
        # closed form: length(R / m^(2n+2)) = binom(2n+4, 3)
        for n in range(12):
            assert _binomial_basis(e_first, n, 4) == comb(2 * n + 4, 3)


# -- 7 ------------------------------------------------------------------------


def test_criterion_7_reproducibility(capsys):
    with criterion(capsys, 7, "verify --json --seed 7 on E3 is byte-identical", budget=600):
        cmd = [sys.executable, "-m", "blowup.cli", "verify", "corpus:e3", "--json", "--seed", "7"]
        runs = [subprocess.run(cmd, capture_output=True, check=True) for _ in range(2)]
        assert runs[0].stdout == runs[1].stdout
        assert b'"status": "PASS"' in runs[0].stdout
