"""
Generating a minimal reduction
==============================

For (x, y, z)^2 no monomial reduction exists, so J is drawn as three random
combinations of the six generators.  The Hilbert coefficients depend on I only.
"""

from blowup import GF, Ideal, PolyRing, generate_minimal_reduction, hilbert_coefficients

R = PolyRing(["x", "y", "z"], GF(32003))
m = R.gens()
I = Ideal(R, [a * b for i, a in enumerate(m) for b in m[i:]])

for seed in (1, 2):
    ctx = generate_minimal_reduction(I, seed)
    print(f"seed {seed}: r = {ctx.r}, attempts = {len(ctx.transcript)}")
    for g in ctx.J.gens:
        print("   ", g)
    print("    e =", hilbert_coefficients(ctx))
