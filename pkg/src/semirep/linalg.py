"""Dense complex matrix kernel.

Matrices are plain ``numpy`` complex arrays.  All rank decisions share one
relative tolerance: a singular value ``s`` counts as zero when
``s <= eps * max(1, s_max)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import IndefiniteError, SemigroupError

DEFAULT_EPS = 1e-9


def as_cmatrix(A) -> np.ndarray:
    A = np.asarray(A, dtype=complex)
    if A.ndim != 2:
        raise ValueError(f"expected a 2-d matrix, got shape {A.shape}")
    if not np.all(np.isfinite(A)):
        raise ValueError("matrix has non-finite entries")
    return A


def adjoint(A) -> np.ndarray:
    return np.conj(np.asarray(A)).T


def opnorm(A) -> float:
    A = np.asarray(A)
    if A.size == 0:
        return 0.0
    return float(np.linalg.norm(A, 2))


def _is_idempotent(M: np.ndarray, eps: float) -> bool:
    m = opnorm(M)
    return opnorm(M @ M - M) <= eps * (1.0 + m * m)


@dataclass(frozen=True)
class PreunitaryReport:
    preunitary: bool
    partial_isometry: bool
    astar_a_idempotent: bool
    a_astar_idempotent: bool

    @property
    def agree(self) -> bool:
        return len({self.preunitary, self.partial_isometry, self.astar_a_idempotent,
                    self.a_astar_idempotent}) == 1

    def __bool__(self) -> bool:
        return self.preunitary


def is_preunitary(A, eps: float = DEFAULT_EPS) -> PreunitaryReport:
    """Evaluate the four equivalent conditions for ``A A* A = A`` separately."""
    A = as_cmatrix(A)
    if A.size == 0:
        return PreunitaryReport(True, True, True, True)
    As = adjoint(A)
    a = opnorm(A)
    pre = opnorm(A @ As @ A - A) <= eps * (1.0 + a ** 3)
    s = np.linalg.svd(A, compute_uv=False)
    partial = bool(np.all((s <= eps) | (np.abs(s - 1.0) <= eps)))
    return PreunitaryReport(
        bool(pre), partial, _is_idempotent(As @ A, eps), _is_idempotent(A @ As, eps)
    )


def is_unitary(U, eps: float = DEFAULT_EPS) -> bool:
    U = as_cmatrix(U)
    if U.shape[0] != U.shape[1]:
        return False
    return opnorm(U @ adjoint(U) - np.eye(U.shape[0])) <= eps * (1 + opnorm(U) ** 2)


def is_hermitian(A, eps: float = DEFAULT_EPS) -> bool:
    A = as_cmatrix(A)
    return A.shape[0] == A.shape[1] and opnorm(A - adjoint(A)) <= eps * (1 + opnorm(A))


def psd_sqrt(A, eps: float = DEFAULT_EPS) -> np.ndarray:
    """Square root of a positive semidefinite Hermitian matrix (tiny negatives clipped)."""
    A = as_cmatrix(A)
    w, V = np.linalg.eigh((A + adjoint(A)) / 2)
    w = np.where(w > 0, w, 0.0)
    return (V * np.sqrt(w)) @ adjoint(V)


def polar_decompose(A, eps: float = DEFAULT_EPS):
    """``A = U H`` with ``H = (A*A)^{1/2}`` and ``U`` the partial isometry with
    ``ker U = ker H``, both read off the SVD ``A = W S V*``."""
    A = as_cmatrix(A)
    if A.size == 0:
        return A.copy(), np.zeros((A.shape[1], A.shape[1]), dtype=complex)
    W, s, Vh = np.linalg.svd(A)
    smax = float(s.max()) if s.size else 0.0
    keep = s > eps * max(1.0, smax)
    H = (adjoint(Vh[: s.size]) * s) @ Vh[: s.size]
    U = W[:, : s.size][:, keep] @ Vh[: s.size][keep]
    return U, H


def nullspace(M, eps: float = DEFAULT_EPS) -> np.ndarray:
    """Orthonormal basis (as columns) of ``{v : M v = 0}``."""
    M = np.asarray(M, dtype=complex)
    ncols = M.shape[1]
    if M.shape[0] == 0:
        return np.eye(ncols, dtype=complex)
    _, s, Vh = np.linalg.svd(M, full_matrices=True)
    smax = float(s.max()) if s.size else 0.0
    rank = int(np.sum(s > eps * max(1.0, smax)))
    return adjoint(Vh[rank:])


def _images(rep) -> list:
    imgs = getattr(rep, "images", rep)
    return [as_cmatrix(m) for m in imgs]


def solve_intertwiners(rep1, rep2, eps: float = DEFAULT_EPS) -> list:
    """Orthonormal basis of ``{X : rep1(s) X = X rep2(s) for all s}``.

    ``rep1`` and ``rep2`` are MatrixRep-like objects (anything with an
    ``images`` attribute) or plain sequences of matrices aligned by element.
    The images need not be multiplicative, so anti-representations work too.
    """
    A, B = _images(rep1), _images(rep2)
    if len(A) != len(B):
        raise SemigroupError("representations are indexed by different element sets")
    d1 = A[0].shape[0] if A else 0
    d2 = B[0].shape[0] if B else 0
    if d1 == 0 or d2 == 0:
        return []
    I1, I2 = np.eye(d1), np.eye(d2)
    # row-major vec: vec(A X) = (A kron I) vec X, vec(X B) = (I kron B^T) vec X
    blocks = [np.kron(a, I2) - np.kron(I1, b.T) for a, b in zip(A, B)]
    M = np.vstack(blocks) if blocks else np.zeros((0, d1 * d2))
    N = nullspace(M, eps)
    return [N[:, k].reshape(d1, d2) for k in range(N.shape[1])]


def intertwiner_dimension(rep1, rep2, eps: float = DEFAULT_EPS) -> int:
    return len(solve_intertwiners(rep1, rep2, eps))


def is_invertible(A, eps: float = DEFAULT_EPS) -> bool:
    A = as_cmatrix(A)
    if A.shape[0] != A.shape[1]:
        return False
    s = np.linalg.svd(A, compute_uv=False)
    return bool(s.min() > eps * max(1.0, float(s.max())))


def positive_factor(A, eps: float = DEFAULT_EPS) -> np.ndarray:
    """``B`` with ``B B* = A`` for positive definite Hermitian ``A`` (``B = A^{1/2}``).

    Raises ``IndefiniteError`` with the inertia of ``A`` otherwise.
    """
    A = as_cmatrix(A)
    if A.shape[0] != A.shape[1] or opnorm(A - adjoint(A)) > 1e-10 * (1 + opnorm(A)):
        raise ValueError("positive_factor needs a Hermitian matrix")
    w, V = np.linalg.eigh((A + adjoint(A)) / 2)
    tol = eps * max(1.0, float(np.abs(w).max()) if w.size else 0.0)
    pos = int(np.sum(w > tol))
    neg = int(np.sum(w < -tol))
    if pos != len(w):
        raise IndefiniteError(pos, neg, len(w) - pos - neg)
    return (V * np.sqrt(w)) @ adjoint(V)


def block_diag(mats: Sequence[np.ndarray]) -> np.ndarray:
    rows = sum(m.shape[0] for m in mats)
    cols = sum(m.shape[1] for m in mats)
    out = np.zeros((rows, cols), dtype=complex)
    r = c = 0
    for m in mats:
        out[r:r + m.shape[0], c:c + m.shape[1]] = m
        r += m.shape[0]
        c += m.shape[1]
    return out


def random_unitary(d: int, rng: np.random.Generator) -> np.ndarray:
    Z = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    Q, R = np.linalg.qr(Z)
    return Q * (np.diag(R) / np.abs(np.diag(R)))


def random_partial_isometry(d: int, rng: np.random.Generator, rank: Optional[int] = None) -> np.ndarray:
    """``U P_V``: a random unitary times the orthogonal projection onto a random subspace."""
    if rank is None:
        rank = int(rng.integers(0, d + 1))
    W = random_unitary(d, rng)[:, :rank]
    return random_unitary(d, rng) @ (W @ adjoint(W))
