"""
Regular exact Borel pair for the Auslander algebra of k[x]/x^n
===============================================================

Builds the algebra, looks at its standard modules and their Ext algebra,
rebuilds the Borel subalgebra from the minimal model and checks the
synthesized pair against the Fenwick combinatorics.

Run with ``python3 demos/auslander_pair.py [n]``.
"""
import sys

from qhborel.ainfty import ExtModel, truncate
from qhborel.borel import reconstruct, synthesize_borel_pair
from qhborel.examples import auslander_algebra, fenwick_projectives
from qhborel.modules import ext_dimensions
from qhborel.qh import SimpleOrder, check_quasi_hereditary, standard_modules

n = int(sys.argv[1]) if len(sys.argv) > 1 else 3
A = auslander_algebra(n)
order = SimpleOrder.natural(n)
print(f"Auslander algebra, n = {n}: dim A = {A.dim}, {A.n_vertices} vertices")

# quasi-heredity: End(Delta_i) = k and every projective is Delta-filtered
rep = check_quasi_hereditary(A, order)
print("quasi-hereditary:", rep.quasi_hereditary)
print("dim Delta_i:", rep.delta_dims)
for i, f in enumerate(rep.filtrations):
    print(f"  P_{i + 1} filtered by Delta", [j + 1 for j in f])

# Ext between standard modules lives in degree 1 only
deltas = standard_modules(A, order)
print("Ext^1(Delta_i, Delta_j):")
for i, D in enumerate(deltas):
    print("  ", [ext_dimensions(D, E, 1)[1] for E in deltas])

# the positive part of the minimal model has no higher products, so B is free
model = truncate(ExtModel(deltas).model)
rec = reconstruct(model)
print(f"reconstructed B: {len(rec.quiver.arrows)} arrows, {len(rec.relations)} relations, dim {rec.algebra.dim}")

# the full pair, compared with the Fenwick tree counts
syn = synthesize_borel_pair(A, order)
fw = fenwick_projectives(n)
print(f"dim R = {syn.R.dim} (Fenwick count {fw.dim_R()}), dim B = {syn.B.dim}")
for i in range(1, n + 1):
    print(f"  Q_{i} contains", {f"P_{v}": m for v, m in syn.multiplicities()[i].items()})
for key, value in syn.report.as_dict().items():
    print(f"  {key}: {value}")
