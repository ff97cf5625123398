"""
Weighted cyclic channels and their circulant images
===================================================

Apply the channel to a random density matrix, watch the output become
circulant under uniform weights, and confirm the two evaluation routes
(Kraus sum vs trace formula) agree.
"""

import numpy as np

from circulant_channels import channels, linalg

np.set_printoptions(precision=4, suppress=True, linewidth=100)

d = 4
rho = linalg.random_density_matrix(d, seed=0)
print("input state (d = %d):" % d)
print(rho)

# uniform weights average over all cyclic shifts; the image is circulant
out = channels.apply_uniform(rho)
print("\nuniform-channel image:")
print(out)
print("is_circulant:", linalg.is_circulant(out))
print("first-row coefficients:", channels.image_coeffs(rho))

# non-uniform weights keep more structure; both routes give the same matrix
lam = np.array([0.5, 0.3, 0.2, 0.0])
a = channels.apply_kraus(lam, rho)
b = channels.apply_closed_form(lam, rho)
print("\nweighted image with lambda =", lam)
print(a)
print("max |kraus - closed form| =", np.max(np.abs(a - b)))
print("trace preserved:", abs(np.trace(a) - 1.0) < 1e-12)

# averaging over every permutation collapses further: one diagonal value,
# one off-diagonal value
flat = channels.apply_mixed_permutation(rho)
print("\nfull permutation average:")
print(flat)
