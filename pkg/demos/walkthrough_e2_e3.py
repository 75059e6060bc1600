"""
Invariants of two monomial ideals in k[x, y]
============================================

The square of the maximal ideal has a reduction number of 1 and a Cohen-Macaulay
associated graded ring.  Removing x^2*y^2 from the fourth power breaks both.
"""

from blowup import Ideal, PairContext, PolyRing, QQ, build_report

R = PolyRing(["x", "y"], QQ)


def pair(I, J):
    return PairContext.from_pair(Ideal(R, [R(f) for f in I]), Ideal(R, [R(f) for f in J]))


# (x, y)^2 with the reduction (x^2, y^2)
e2 = pair(["x^2", "x*y", "y^2"], ["x^2", "y^2"])
rep = build_report(e2)
print("reduction number", rep.r)
print("Hilbert coefficients", rep.e_coeffs)
print("first diagonal", rep.rows[0].sigma[:6])

# (x^4, x^3 y, x y^3, y^4): x^2 y^2 is missing, so I^2 != J I
e3 = pair(["x^4", "x^3*y", "x*y^3", "y^4"], ["x^4", "y^4"])
rep = build_report(e3)
print("reduction number", rep.r)
print("Hilbert coefficients", rep.e_coeffs, "Sally coefficients", rep.s_coeffs)
for row in rep.rows:
    print(f"  p={row.p}  Lambda={row.lambda_p}  Delta={row.delta_cap_p}  delta={row.delta_p}")

# the antidiagonal totals telescope to length(I^m / J^m)
print("antidiagonal", rep.antidiagonal[:6])
print(len(rep.identities), "identities checked")
