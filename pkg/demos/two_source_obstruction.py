"""
An order-two action with no invariant Borel subalgebra
=======================================================

The path algebra of 1 -> 2 <- 3 carries the action alpha -> -alpha,
beta -> beta.  On the Morita equivalent algebra R the Borel subalgebra B is
moved by g, g(B) is conjugate to B, yet no twist of the action that keeps B
fixed has the same characteristic polynomial as g.

Run with ``python3 demos/two_source_obstruction.py``.
"""
from qhborel.borel import conjugate_subalgebras, verify_conjugation
from qhborel.examples import example_two_source
from qhborel.qh import verify_exact_borel
from qhborel.skew import (
    action_char_polys,
    classify_compatible_twists,
    cyclic_action,
    invariant_borel_obstruction,
    is_stable,
    skew_group_algebra,
)

ts = example_two_source()
R, iota = ts.R, ts.iota
print(f"dim A = {ts.A.dim}, dim R = {R.dim}, dim B = {ts.B.dim}")
print("basis of R:", R.names)

rep = verify_exact_borel(R, ts.order_R, iota)
print("B is a regular exact Borel subalgebra:", rep.is_exact_borel and rep.regular)

act = cyclic_action(R, ts.action_R, 2)
print("g fixes B:", is_stable(act, iota))
print("dim R*G =", skew_group_algebra(R, act).dim)

# g(B) is conjugate to B
gB = iota.compose_automorphism(ts.action_R)
res = conjugate_subalgebras(iota, gB)
print("conjugating unit:", R.name_of(res.unit), "verified:", verify_conjugation(iota, gB, res.unit))

# twists g -> rho g(-) rho^-1 that keep B fixed
cl = classify_compatible_twists(R, act, iota)
print(f"{len(cl.families)} families of twists ({cl.method}):")
for f in cl.families:
    print("  rho =", f.describe(R))

print("characteristic polynomial of g:", action_char_polys(act)["g"])
verdict = invariant_borel_obstruction(R, act, iota)
print("verdict:", verdict.verdict)
for label, polys in verdict.table.items():
    print(f"  {polys['g']:<24} {label}")
