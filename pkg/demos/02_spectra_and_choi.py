"""
Spectra, Choi matrices, and the entanglement-breaking boundary
==============================================================

The natural representation of the uniform channel is a projection, so its
spectrum is d ones and d^2 - d zeros.  The Fourier transform of the weight
vector decides everything else: the channel breaks entanglement exactly
when every nonzero-mode coefficient vanishes, i.e. only for uniform
weights.
"""

import numpy as np

from circulant_channels import channels

np.set_printoptions(precision=4, suppress=True)

for d in (2, 3, 5):
    rep = channels.channel_spectrum(channels.uniform_weights(d))
    print(
        "d = %d: multiplicity of 1 = %d, of 0 = %d"
        % (d, rep.multiplicity_of_one, rep.multiplicity_of_zero)
    )

# a weighted example on the qubit
lam = np.array([0.75, 0.25])
alpha = channels.weight_fourier_coeffs(lam)
print("\nlambda =", lam)
print("weight Fourier coefficients:", alpha)
print("entanglement breaking:", channels.is_entanglement_breaking(lam))
print("choi PT spectrum:", np.sort(channels.choi_pt_spectrum(lam)))

# the negative PT eigenvalue above certifies entanglement is preserved;
# uniform weights wipe it out
uni = channels.uniform_weights(2)
print("\nuniform qubit weights:")
print("entanglement breaking:", channels.is_entanglement_breaking(uni))
print("choi PT spectrum:", np.sort(channels.choi_pt_spectrum(uni)))

# the uniform Choi matrix is manifestly separable: a DFT frame applied to
# a diagonal projector
frame, core = channels.choi_separable_form(3)
rebuilt = frame @ core @ frame.conj().T
print("\nseparable-form reconstruction error (d = 3):")
print(np.max(np.abs(rebuilt - channels.choi(channels.uniform_weights(3)))))
