"""
Depth of the associated graded ring
===================================

gr_I(R) is presented over k[x, y, V1..Vmu]; generic linear forms in the V's are
stacked while they stay nonzerodivisors.
"""

from blowup import Ideal, PolyRing, QQ, depth_gr, gr_presentation

R = PolyRing(["x", "y"], QQ)

for gens in (["x^2", "x*y", "y^2"], ["x^2", "x*y^2", "y^4"], ["x^4", "x^3*y", "x*y^3", "y^4"]):
    I = Ideal(R, [R(f) for f in gens])
    pres = gr_presentation(I)
    res = depth_gr(pres, seed=0)
    print(", ".join(gens))
    print("   pieces", [pres.piece_dimension(n) for n in range(5)])
    print("   depth", res.depth, "of", res.d, "(Cohen-Macaulay)" if res.is_cm else "")
    for ell in res.regular_sequence:
        print("   regular:", ell)
