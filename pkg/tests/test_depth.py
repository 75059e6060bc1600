import pytest

from blowup.bigraded import build_report
from blowup.depth import (
    DepthResult,
    depth_gr,
    failures,
    gr_presentation,
    is_regular_element,
    verify_theorems,
)
from blowup.errors import PreconditionError, UnsupportedInputError
from blowup.filtration import PairContext
from blowup.groebner import Ideal
from blowup.hilbert import hilbert_h0


def _ideal(R, *texts):
    return Ideal(R, [R(t) for t in texts])


def test_regular_element_examples(R2):
    x, y = R2.gens()
    assert is_regular_element(_ideal(R2, "x*y"), x + y)
    assert not is_regular_element(_ideal(R2, "x^2"), x)
    assert is_regular_element(Ideal(R2, []), x)
    with pytest.raises(PreconditionError):
        is_regular_element(_ideal(R2, "x*y"), x * y * y)


def test_maximal_ideal_is_cm(R2):
    pres = gr_presentation(_ideal(R2, "x", "y"))
    res = depth_gr(pres)
    assert res.depth == 2 and res.is_cm and res.rees_depth is None


def test_e2_depth(R2):
    I = _ideal(R2, "x^2", "x*y", "y^2")
    res = depth_gr(gr_presentation(I), seed=3)
    assert (res.depth, res.d, res.is_cm) == (2, 2, True)
    assert len(res.regular_sequence) == 2


def test_e3_depth(R2):
    I = _ideal(R2, "x^4", "x^3*y", "x*y^3", "y^4")
    res = depth_gr(gr_presentation(I))
    assert res.depth == 0
    assert res.rees_depth == 1
    assert res.to_dict()["is_cm"] is False


@pytest.mark.parametrize("gens", [("x^2", "x*y", "y^2"), ("x^4", "x^3*y", "x*y^3", "y^4"), ("x^2", "x*y^2", "y^4")])
def test_presentation_pieces_match_hilbert(R2, gens):
    I = _ideal(R2, *gens)
    J = _ideal(R2, gens[0], gens[-1])
    ctx = PairContext.from_pair(I, J)
    pres = gr_presentation(I)
    assert [pres.piece_dimension(n) for n in range(5)] == [hilbert_h0(ctx, n) for n in range(5)]


def test_depth_deterministic(R2):
    pres = gr_presentation(_ideal(R2, "x^2", "x*y^2", "y^4"))
    a, b = depth_gr(pres, seed=11), depth_gr(pres, seed=11)
    assert a == b


def test_rejects_non_primary(R2):
    with pytest.raises(UnsupportedInputError):
        gr_presentation(_ideal(R2, "x^2", "x*y"))
    with pytest.raises(UnsupportedInputError):
        gr_presentation(_ideal(R2, "x - 1", "y"))
    with pytest.raises(UnsupportedInputError):
        gr_presentation(_ideal(R2, "x^2 - x", "y"))


def test_verdicts_e3(R2):
    I = _ideal(R2, "x^4", "x^3*y", "x*y^3", "y^4")
    ctx = PairContext.from_pair(I, _ideal(R2, "x^4", "y^4"))
    report = build_report(ctx)
    verdicts = verify_theorems(report, depth_gr(gr_presentation(I)))
    assert failures(verdicts) == []
    by_name = {v.name[:3]: v.status for v in verdicts}
    assert by_name["(a)"] == "NOT-APPLICABLE"
    assert by_name["(c)"] == "PASS" and by_name["(d)"] == "PASS"
    assert by_name["(g)"] == "PASS"


def test_verdicts_detect_false_depth(R2):
    I = _ideal(R2, "x^2", "x*y", "y^2")
    report = build_report(PairContext.from_pair(I, _ideal(R2, "x^2", "y^2")))
    bogus = DepthResult(0, 2, [])
    names = {v.name[:3] for v in failures(verify_theorems(report, bogus))}
    assert {"(a)", "(b)"} <= names


def test_e3_depth_zero_certificate(R2):
    # x^2 y^2 multiplies I into I^2 without lying in I, so (I^2 : I) != I and depth(gr) = 0
    from blowup.groebner import ideal_product

    I = _ideal(R2, "x^4", "x^3*y", "x*y^3", "y^4")
    w = R2("x^2*y^2")
    square = ideal_product(I, I)
    assert all(square.contains(w * g) for g in I.gens) and not I.contains(w)
    assert depth_gr(gr_presentation(I), trials=8, seed=5).depth == 0
