"""
Acting on one half of an entangled state erases entanglement
============================================================

At 2x2 and 2x3 the partial-transpose test is exact, so we can watch a
certified-entangled state turn separable under the uniform channel on
subsystem A alone.
"""

import numpy as np

from circulant_channels import bipartite

for da, db in [(2, 2), (2, 3)]:
    rho = bipartite.random_entangled_state(da, db, seed=1)
    before = bipartite.ppt_check(rho, (da, db))
    out = bipartite.apply_uniform_A(rho, (da, db))
    after = bipartite.ppt_check(out, (da, db))
    print("dims %dx%d:" % (da, db))
    print("  input  min PT eigenvalue: %+.6f  (entangled: %s)" % (before.min_eigenvalue, not before.is_ppt))
    print("  output min PT eigenvalue: %+.6f  (PPT: %s)" % (after.min_eigenvalue, after.is_ppt))

# with a qubit on the A side the output is even invariant under partial
# transposition of that side
rho = bipartite.random_entangled_state(2, 3, seed=3)
out = bipartite.apply_uniform_A(rho, (2, 3))
print("\nPT-invariance of the output at 2x3:", bipartite.pt_invariance_check(out, (2, 3)))

# weighted channels sit in between: on the maximally entangled state the
# most negative PT eigenvalue shrinks with the weight imbalance
v = np.zeros(4, dtype=complex)
v[0] = v[3] = 1.0 / np.sqrt(2.0)
bell = np.outer(v, v.conj())
for w in (1.0, 0.9, 0.75, 0.5):
    lam = np.array([w, 1.0 - w])
    out = bipartite.apply_weighted(bell, (2, 2), weights_a=lam)
    rep = bipartite.ppt_check(out, (2, 2))
    print("lambda = (%.2f, %.2f): min PT eigenvalue %+.4f" % (w, 1.0 - w, rep.min_eigenvalue))
