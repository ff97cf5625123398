"""Local action of the cyclic averaging channel on bipartite operators,
partial-transpose positivity reports, and entanglement-erasure sampling.

Composite indices are A-major: basis vector (i, p) sits at i * dB + p.  The
closed forms here replace full Kraus conjugation with partial traces:

* channel on A only:   (1/dA) sum_k P^k (x) Tr_A[X (P^-k (x) I)]
* channel on A and B:  (1/(dA dB)) sum_{r, s} Tr[X (P^-r (x) P^-s)] P^r (x) P^s

Because the averaging channel is entanglement breaking, applying it to one
side of any state yields a PPT state; at 2 (x) 2 and 2 (x) 3 the PPT test is
decisive, so entanglement is genuinely erased there.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import channels, linalg


class EntangledSamplingError(RuntimeError):
    """Rejection sampling failed to find an entangled state within budget."""


def basis_image(i: int, j: int, d: int) -> np.ndarray:
    """Uniform-channel image of the matrix unit |i><j|, indices 1-based.

    Equals the cyclic shift to the power (j - i) mod d, divided by d; in
    particular every |i><i| maps to the maximally mixed state.
    """
    d = linalg._check_dim(d)
    if not (1 <= i <= d and 1 <= j <= d):
        raise ValueError(f"indices must lie in 1..{d}, got ({i}, {j})")
    return linalg.cyclic_shift(d, (j - i) % d) / d


def apply_uniform_A(x, dims) -> np.ndarray:
    """Averaging channel on subsystem A, identity on B, via partial traces."""
    x, da, db = linalg.as_bipartite(x, dims)
    eye_b = np.eye(db, dtype=complex)
    out = np.zeros_like(x)
    for k in range(da):
        pk = linalg.cyclic_shift(da, k)
        block = linalg.partial_trace(x @ linalg.kron(pk.conj().T, eye_b), (da, db), 0)
        out += linalg.kron(pk, block)
    return out / da


def apply_uniform_AB(x, dims) -> np.ndarray:
    """Averaging channel on both subsystems, via the double trace form."""
    x, da, db = linalg.as_bipartite(x, dims)
    out = np.zeros_like(x)
    for ra in range(da):
        pa = linalg.cyclic_shift(da, ra)
        for rb in range(db):
            pb = linalg.cyclic_shift(db, rb)
            coeff = np.trace(x @ linalg.kron(pa.conj().T, pb.conj().T))
            out += coeff * linalg.kron(pa, pb)
    return out / (da * db)


def apply_weighted(x, dims, weights_a=None, weights_b=None) -> np.ndarray:
    """Kraus application of weighted cyclic channels on each subsystem.

    ``None`` leaves that side untouched; passing uniform weights on A (and
    None on B) reproduces :func:`apply_uniform_A` through an independent
    code path, which the tests exploit as a cross-check.
    """
    x, da, db = linalg.as_bipartite(x, dims)

    def terms(weights, d):
        if weights is None:
            return [(1.0, np.eye(d, dtype=complex))]
        lam = channels.as_weights(weights)
        if lam.size != d:
            raise ValueError(f"weight count {lam.size} does not match dimension {d}")
        return [(lam[k], linalg.cyclic_shift(d, k)) for k in range(d)]

    out = np.zeros_like(x)
    for wa, pa in terms(weights_a, da):
        if wa == 0.0:
            continue
        for wb, pb in terms(weights_b, db):
            if wb == 0.0:
                continue
            u = linalg.kron(pa, pb)
            out += (wa * wb) * (u @ x @ u.conj().T)
    return out


def is_block_circulant(x, dims, tol: float = 1e-10, circulant_blocks: bool = False) -> bool:
    """True when block (i, j) depends only on (j - i) mod dA.

    With ``circulant_blocks`` each block must additionally be circulant
    itself, the structure produced by averaging on both subsystems.
    """
    x, da, db = linalg.as_bipartite(x, dims)
    ref = [x[0:db, k * db : (k + 1) * db] for k in range(da)]
    for i in range(da):
        for j in range(da):
            block = x[i * db : (i + 1) * db, j * db : (j + 1) * db]
            if np.max(np.abs(block - ref[(j - i) % da])) > tol:
                return False
    if circulant_blocks:
        return all(linalg.is_circulant(b, tol) for b in ref)
    return True


@dataclass(frozen=True)
class PptReport:
    """Spectrum of a partial transpose and the resulting PPT verdict."""

    min_eigenvalue: float
    is_ppt: bool
    spectrum: np.ndarray
    subsystem: int


def ppt_check(x, dims, tol: float = 1e-10, subsystem: int = 0) -> PptReport:
    """Eigenvalues of the partial transpose; PPT iff the minimum >= -tol.

    The input must be Hermitian (its partial transpose then is too).  At
    2 (x) 2 and 2 (x) 3 a failing check certifies entanglement and a passing
    one certifies separability.
    """
    x, da, db = linalg.as_bipartite(x, dims)
    spectrum = linalg.hermitian_spectrum(linalg.partial_transpose(x, (da, db), subsystem))
    lo = float(spectrum[0])
    return PptReport(
        min_eigenvalue=lo,
        is_ppt=bool(lo >= -tol),
        spectrum=spectrum,
        subsystem=subsystem,
    )


def pt_invariance_check(x, dims, tol: float = 1e-12) -> bool:
    """dA = 2 only: the A-side image equals its own partial transpose on A.

    Both Kraus operators (identity and the qubit flip) are symmetric, so
    transposing the A factor of the image changes nothing, for any input.
    """
    x, da, db = linalg.as_bipartite(x, dims)
    if da != 2:
        raise ValueError(f"partial-transpose invariance needs dA = 2, got {da}")
    y = apply_uniform_A(x, (da, db))
    return bool(np.max(np.abs(linalg.partial_transpose(y, (da, db), 0) - y)) <= tol)


def random_entangled_state(
    da: int, db: int, seed=None, tol: float = 1e-10, max_tries: int = 10000
) -> np.ndarray:
    """Rejection-sample Gaussian-induced states until one fails the PPT test.

    A failing partial transpose witnesses entanglement at any dimension
    pair.  Deterministic given the seed; raises
    :class:`EntangledSamplingError` if the budget runs out.
    """
    da, db = linalg._check_dim(da), linalg._check_dim(db)
    rng = np.random.default_rng(seed)
    for _ in range(max_tries):
        rho = linalg.random_density_matrix(da * db, rng)
        if not ppt_check(rho, (da, db), tol=tol).is_ppt:
            return rho
    raise EntangledSamplingError(
        f"no entangled state found at {da} x {db} in {max_tries} draws"
    )
