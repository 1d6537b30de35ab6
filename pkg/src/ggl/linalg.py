"""Dense complex linear algebra at small dimension.

Everything downstream (Grover operators, the analog Hamiltonian, Trotter
slices, transfer matrices) is either a small dense matrix or a 2x2 block,
so this module only needs exact-ish dense tools: matrix powers, Hermitian
exponentials via eigendecomposition, spectral norms, commutators.  Dense
construction is capped (default 4096, override with GGL_DENSE_CAP) to keep
oracle work honest; large instances must use the closed forms.
"""

from __future__ import annotations

import os

import numpy as np

DEFAULT_DENSE_CAP = 4096

HERMITIAN_TOL = 1e-10
UNITARY_TOL = 1e-10


def dense_cap() -> int:
    """Largest dimension dense constructors accept.

    Reads GGL_DENSE_CAP from the environment on every call so tests and
    callers can adjust it without re-importing.
    """
    raw = os.environ.get("GGL_DENSE_CAP")
    if raw is None:
        return DEFAULT_DENSE_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"GGL_DENSE_CAP must be an integer, got {raw!r}") from None
    if cap < 2:
        raise ValueError(f"GGL_DENSE_CAP must be at least 2, got {cap}")
    return cap


def check_dense_size(n: int) -> None:
    """Raise ValueError if an N x N dense matrix would exceed the cap."""
    cap = dense_cap()
    if n > cap:
        raise ValueError(
            f"dense dimension {n} exceeds cap {cap}; "
            "set GGL_DENSE_CAP or use the closed-form routes"
        )


def as_complex_matrix(m) -> np.ndarray:
    """Coerce to a square complex ndarray, rejecting NaN/Inf entries."""
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix has non-finite entries")
    return a


def mat_mul(a, b) -> np.ndarray:
    """Matrix product with an explicit dimension check."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.ndim != 2 or b.ndim != 2 or a.shape[1] != b.shape[0]:
        raise ValueError(f"dimension mismatch: {a.shape} x {b.shape}")
    return a @ b


def mat_power(m, p: int) -> np.ndarray:
    """M**p by binary exponentiation; M**0 is the identity."""
    m = as_complex_matrix(m)
    if p < 0 or p != int(p):
        raise ValueError(f"power must be a nonnegative integer, got {p!r}")
    p = int(p)
    result = np.eye(m.shape[0], dtype=complex)
    base = m.copy()
    while p:
        if p & 1:
            result = result @ base
        p >>= 1
        if p:
            base = base @ base
    return result


def require_hermitian(h, tol: float = HERMITIAN_TOL) -> np.ndarray:
    h = as_complex_matrix(h)
    dev = np.max(np.abs(h - h.conj().T)) if h.size else 0.0
    if dev > tol:
        raise ValueError(f"matrix is not Hermitian (max deviation {dev:.3e})")
    return h


def herm_expm(h, scale: complex) -> np.ndarray:
    """exp(scale * H) for Hermitian H, via eigendecomposition.

    With purely imaginary scale the result is unitary up to rounding,
    which is why this is preferred over scaling-and-squaring here: every
    exponent in this package is Hermitian.
    """
    h = require_hermitian(h)
    w, v = np.linalg.eigh(h)
    return (v * np.exp(scale * w)) @ v.conj().T


def spectral_norm(m) -> float:
    """Largest singular value, via eigenvalues of M^dagger M."""
    m = as_complex_matrix(m)
    if m.size == 0:
        return 0.0
    evals = np.linalg.eigvalsh(m.conj().T @ m)
    return float(np.sqrt(max(float(evals[-1]), 0.0)))


def commutator(a, b) -> np.ndarray:
    """AB - BA."""
    a = as_complex_matrix(a)
    b = as_complex_matrix(b)
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    return a @ b - b @ a


def is_unitary(m, tol: float = UNITARY_TOL) -> bool:
    """Entrywise check of M^dagger M against the identity."""
    m = as_complex_matrix(m)
    gram = m.conj().T @ m
    return bool(np.max(np.abs(gram - np.eye(m.shape[0]))) <= tol)
