"""Dense complex linear algebra on small Hilbert spaces.

Matrices and state vectors are plain complex numpy arrays. Everything here
is dimension-agnostic but tuned for the 2..64 dimensional spaces used by
the rest of the package.
"""

from __future__ import annotations

from itertools import product
from typing import NamedTuple

import numpy as np

from .errors import DimMismatchError, DimNotPowerOfTwoError, NotHermitianError

__all__ = [
    "PAULI_1Q",
    "PauliString",
    "GroundPair",
    "kron",
    "hermitian_deviation",
    "require_hermitian",
    "expm_herm_generator",
    "ground_eigenpair",
    "pauli_decompose",
    "pauli_matrix",
    "pauli_reconstruct",
    "normalize_state",
]

PAULI_1Q = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex),
    "Y": np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex),
    "Z": np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex),
}

# Hermiticity checks scale with the matrix magnitude so that generators
# expressed in rad/s (entries ~1e10) are not rejected for float noise.
_HERM_RTOL = 1e-10


class PauliString(NamedTuple):
    label: str
    coefficient: float

    def matrix(self) -> np.ndarray:
        return self.coefficient * pauli_matrix(self.label)


class GroundPair(NamedTuple):
    value: float
    vector: np.ndarray
    degenerate: bool


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product of two square matrices."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or b.ndim != 2 or b.shape[0] != b.shape[1]:
        raise DimMismatchError("kron expects square matrices")
    return np.kron(a, b)


def hermitian_deviation(m: np.ndarray) -> float:
    """Max-abs deviation from Hermitian symmetry."""
    m = np.asarray(m)
    return float(np.max(np.abs(m - m.conj().T))) if m.size else 0.0


def require_hermitian(m: np.ndarray, tol: float = _HERM_RTOL, what: str = "matrix") -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimMismatchError(f"{what} must be square, got shape {m.shape}")
    scale = max(1.0, float(np.max(np.abs(m))) if m.size else 0.0)
    dev = hermitian_deviation(m)
    if dev > tol * scale:
        raise NotHermitianError(f"{what} deviates from Hermitian symmetry by {dev:.3e}")
    return m


def expm_herm_generator(h: np.ndarray, t: float) -> np.ndarray:
    """Propagator exp(-i*h*t) of a Hermitian generator h.

    Uses the eigendecomposition of h, so the result is unitary to machine
    precision for the small dimensions used here.
    """
    h = require_hermitian(h, what="generator")
    if not np.isfinite(t):
        raise ValueError("time must be finite")
    lam, vec = np.linalg.eigh(h)
    phases = np.exp(-1j * lam * t)
    return (vec * phases) @ vec.conj().T


def ground_eigenpair(m: np.ndarray, degeneracy_tol: float = 1e-9) -> GroundPair:
    """Lowest eigenvalue and phase-fixed eigenvector of a Hermitian matrix.

    The eigenvector's largest-magnitude component is rotated onto the
    positive real axis so that results are deterministic test fixtures.
    A (near-)degenerate lowest eigenvalue is flagged; the returned vector
    is then an arbitrary unit vector of the eigenspace.
    """
    m = require_hermitian(m, tol=1e-8, what="matrix")
    lam, vec = np.linalg.eigh(m)
    value = float(lam[0])
    v = vec[:, 0].copy()
    k = int(np.argmax(np.abs(v)))
    phase = v[k] / abs(v[k])
    v = v / phase
    v = v / np.linalg.norm(v)
    scale = max(1.0, float(np.max(np.abs(lam))))
    degenerate = m.shape[0] > 1 and (lam[1] - lam[0]) <= degeneracy_tol * scale
    return GroundPair(value, v, degenerate)


def pauli_matrix(label: str) -> np.ndarray:
    """Dense matrix of a multi-qubit Pauli label such as ``"ZIX"``."""
    out = np.array([[1.0 + 0.0j]])
    for ch in label:
        try:
            out = np.kron(out, PAULI_1Q[ch])
        except KeyError:
            raise ValueError(f"invalid Pauli letter {ch!r} in {label!r}") from None
    return out


def pauli_decompose(m: np.ndarray, q: int, cutoff: float = 1e-12) -> list[PauliString]:
    """Expand a Hermitian matrix in the tensor-product Pauli basis.

    Coefficients are Tr(P @ m) / 2**q; terms with |coefficient| <= cutoff
    are dropped. Labels are emitted in lexicographic (I, X, Y, Z) order.
    """
    m = require_hermitian(m, what="matrix")
    if m.shape[0] != 2**q:
        raise DimNotPowerOfTwoError(f"dim {m.shape[0]} != 2**{q}")
    dim = 2**q
    terms = []
    for letters in product("IXYZ", repeat=q):
        label = "".join(letters)
        c = np.trace(pauli_matrix(label) @ m) / dim
        if abs(c.imag) > 1e-9 * max(1.0, abs(c.real)):
            raise NotHermitianError(f"complex Pauli coefficient {c} for {label}")
        if abs(c.real) > cutoff:
            terms.append(PauliString(label, float(c.real)))
    return terms


def pauli_reconstruct(terms: list[PauliString], q: int) -> np.ndarray:
    out = np.zeros((2**q, 2**q), dtype=complex)
    for t in terms:
        out += t.matrix()
    return out


def normalize_state(psi: np.ndarray, tol: float = 1e-10) -> np.ndarray:
    """Validate and return a unit-norm state vector."""
    psi = np.asarray(psi, dtype=complex).ravel()
    n = np.linalg.norm(psi)
    if not np.isfinite(n) or abs(n - 1.0) > tol:
        raise ValueError(f"state norm {n} is not 1 within {tol}")
    return psi / n
