import random

import pytest

from blowup.errors import PreconditionError
from blowup.groebner import Ideal, ideal_product, ideal_sum
from blowup.local_length import is_locally_m_primary, local_length, maximal_power, monomial_length_oracle
from blowup.polynomial import GF, PolyRing, QQ

from conftest import random_monomial_ideal


def test_examples(R2):
    x, y = R2.gens()
    m2 = Ideal(R2, [x**2, x * y, y**2])
    assert local_length(Ideal.unit(R2), m2).value == 3
    assert local_length(m2, m2).value == 0
    assert local_length(m2, Ideal(R2, [x**2, y**2])).value == 1


def test_result_is_certified(R2):
    res = local_length(Ideal.unit(R2), Ideal(R2, [R2("x^2 - x^3"), R2("y^2")]))
    assert res.stabilized and res.value == 4
    assert res.truncation_level >= 1


def test_not_nested_is_rejected(R2):
    x, y = R2.gens()
    with pytest.raises(PreconditionError):
        local_length(Ideal(R2, [x**2, y]), Ideal(R2, [x, y**2]))


def test_infinite_quotient_of_A_is_rejected(R2):
    x, y = R2.gens()
    with pytest.raises(PreconditionError):
        local_length(Ideal(R2, [x]), Ideal(R2, [x**2]))


def test_oracle_examples(R2):
    x, y = R2.gens()
    m = Ideal(R2, [x, y])
    m2 = Ideal(R2, [x**2, x * y, y**2])
    assert monomial_length_oracle(m, m2) == 2
    assert monomial_length_oracle(m2, m2) == 0
    A = Ideal(R2, [x**4, x**3 * y, x * y**3, y**4])
    B = ideal_product(Ideal(R2, [x**4, y**4]), A)
    assert monomial_length_oracle(A, B) == 27
    assert local_length(A, B).value == 27


def test_oracle_rejects_polynomials(R2):
    with pytest.raises(PreconditionError):
        monomial_length_oracle(Ideal.unit(R2), Ideal(R2, [R2("x + y"), R2("y^2")]))


def test_oracle_handles_non_primary_B_with_finite_quotient(R2):
    x, y = R2.gens()
    assert monomial_length_oracle(Ideal(R2, [x]), Ideal(R2, [x**2, x * y])) == 1


def test_localization_probe():
    R = PolyRing(["x"], QQ)
    (x,) = R.gens()
    B = Ideal(R, [x * (x - 1)])
    # globally R/B has dimension 2; only the point 0 is seen locally
    assert B.vector_space_dimension() == 2
    assert local_length(Ideal.unit(R), B).value == 1
    # x - 1 is a unit at the origin, so (x) and (x(x-1)) agree there
    assert local_length(Ideal(R, [x]), B).value == 0


def test_localization_probe_two_variables(R2):
    x, y = R2.gens()
    B = Ideal(R2, [x * (x - 1), y**2 - y**3])
    assert B.vector_space_dimension() == 6
    assert local_length(Ideal.unit(R2), B).value == 2


def test_is_locally_m_primary(R2):
    x, y = R2.gens()
    assert is_locally_m_primary(Ideal(R2, [x**2, y**3]))
    assert not is_locally_m_primary(Ideal(R2, [x]))
    assert not is_locally_m_primary(Ideal(R2, [x + 1, y]))
    # off-origin components do not matter
    assert is_locally_m_primary(Ideal(R2, [x * (x - 1), y]))


def test_maximal_power(R2):
    assert len(maximal_power(R2, 3).gens) == 4


def _nested_chain(rng, ring):
    C = random_monomial_ideal(rng, ring, max_deg=6)
    B = ideal_sum(C, random_monomial_ideal(rng, ring, max_deg=5, primary=False, count=2))
    A = ideal_sum(B, random_monomial_ideal(rng, ring, max_deg=4, primary=False, count=2))
    return A, B, C


@pytest.mark.parametrize("nvars", [2, 3])
def test_additivity_on_monomial_ladders(nvars):
    rng = random.Random(nvars)
    ring = PolyRing(["x", "y", "z"][:nvars], QQ)
    for _ in range(15):
        A, B, C = _nested_chain(rng, ring)
        ac = local_length(A, C).value
        assert ac == local_length(A, B).value + local_length(B, C).value
        assert ac == monomial_length_oracle(A, C)


def test_non_homogeneous_input_uses_truncation():
    R = PolyRing(["x", "y"], GF(32003))
    x, y = R.gens()
    A = Ideal(R, [x + y**2, y**3])
    B = ideal_product(A, Ideal(R, [x, y]))
    res = local_length(A, B)
    assert res.stabilized and res.truncation_level >= 1
    # A is a complete intersection of colength 3, so A/mA has dimension 2
    assert res.value == 2
