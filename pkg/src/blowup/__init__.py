"""Exact invariants of blow-up algebras of m-primary ideals in k[x_1..x_d] at the origin."""
from .bigraded import (
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
from .depth import DepthResult, GrPresentation, depth_gr, gr_presentation, is_regular_element, verify_theorems
from .filtration import PairContext, generate_minimal_reduction, verify_reduction
from .groebner import (
    Ideal,
    buchberger,
    eliminate,
    ideal_colon,
    ideal_intersection,
    ideal_membership,
    ideal_power_ladder,
    ideal_product,
    ideal_sum,
    normal_form,
)
from .hilbert import (
    BinomialPolynomial,
    SampledFunction,
    fit_binomial_polynomial,
    hilbert_coefficients,
    hilbert_h0,
    sally_coefficients,
    sally_length,
)
from .local_length import LocalLengthResult, is_locally_m_primary, local_length, monomial_length_oracle
from .polynomial import GF, QQ, DEGREVLEX, LEX, MonomialOrder, PolyRing, Polynomial, elimination_order, monomial_compare
from .problem import ProblemSpec, parse_problem
from .report import emit_report, run_command

__version__ = "0.1.0"
