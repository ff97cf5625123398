"""Numerics for cyclic-shift averaging channels.

The package builds the weighted channel family X -> sum_k lam[k] P^k X P^-k
from a single cyclic-shift permutation P, and everything that hangs off it:
natural representations and spectra, Choi matrices and their partial
transposes, entanglement-breaking classification, off-diagonal coherence
bounds, canonicalization of pure-state tuples by Bargmann invariant, and
the local action on bipartite operators.
"""

from . import bargmann, bipartite, channels, coherence, linalg, serialize

__version__ = "0.1.0"

__all__ = [
    "bargmann",
    "bipartite",
    "channels",
    "coherence",
    "linalg",
    "serialize",
]
