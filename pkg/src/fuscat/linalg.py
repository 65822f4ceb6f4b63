"""Tolerance-aware dense linear algebra over complex double precision.

Every other module sits on top of these kernels: least-squares solves,
eigendecompositions, simultaneous diagonalization of commuting families,
subspace intersection, and integer snapping.  Matrices and vectors are plain
``numpy`` arrays of ``complex128``; all randomness flows through one explicit
seed and all comparisons go through a :class:`Tolerance`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

__all__ = [
    "Tolerance",
    "DEFAULT_TOL",
    "Inconsistent",
    "NotDiagonalizable",
    "NotCommuting",
    "DegenerateSeed",
    "NotNearInteger",
    "solve_linear",
    "eigen",
    "common_eigenbasis",
    "joint_eigenspaces",
    "orthonormal_basis",
    "subspace_intersection",
    "subspace_contains",
    "snap_integer",
    "snap_integer_array",
]


class Inconsistent(Exception):
    """Linear system has no solution within tolerance."""


class NotDiagonalizable(Exception):
    """No full eigenbasis could be produced within tolerance."""


class NotCommuting(Exception):
    """Input matrices do not commute within tolerance."""


class DegenerateSeed(Exception):
    """Random splitting failed for every retried seed."""


class NotNearInteger(Exception):
    """Value is not within snapping distance of an integer."""


@dataclass(frozen=True)
class Tolerance:
    """Comparison thresholds shared across the package.

    Equality of scalars a, b is ``|a-b| <= abs_tol + rel_tol*max(|a|,|b|)``
    (symmetric in a and b); snapping succeeds only within ``snap_tol`` of an
    integer.
    """

    abs_tol: float = 1e-9
    rel_tol: float = 1e-9
    snap_tol: float = 1e-6

    def __post_init__(self) -> None:
        if self.abs_tol < 0 or self.rel_tol < 0 or self.snap_tol < 0:
            raise ValueError("tolerances must be non-negative")

    def close(self, a: complex, b: complex) -> bool:
        a, b = complex(a), complex(b)
        return abs(a - b) <= self.abs_tol + self.rel_tol * max(abs(a), abs(b))

    def allclose(self, a, b) -> bool:
        a = np.asarray(a, dtype=complex)
        b = np.asarray(b, dtype=complex)
        if a.shape != b.shape:
            return False
        bound = self.abs_tol + self.rel_tol * np.maximum(np.abs(a), np.abs(b))
        return bool(np.all(np.abs(a - b) <= bound))

    def zero(self, a) -> bool:
        return bool(np.max(np.abs(np.atleast_1d(np.asarray(a)))) <= self.abs_tol)


DEFAULT_TOL = Tolerance()

_MAX_SEED_TRIES = 8


class _SplitFailed(Exception):
    """Internal: a subspace could not be split cleanly; retry with new seed."""


def _as_matrix(A) -> np.ndarray:
    A = np.asarray(A, dtype=complex)
    if A.ndim != 2:
        raise ValueError(f"expected a matrix, got ndim={A.ndim}")
    return A


def _as_vector(b) -> np.ndarray:
    b = np.asarray(b, dtype=complex)
    if b.ndim != 1:
        raise ValueError(f"expected a vector, got ndim={b.ndim}")
    return b


def solve_linear(A, b, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Solve A x = b, returning the minimum-norm least-squares solution.

    Raises :class:`Inconsistent` when the residual ``max|Ax-b|`` exceeds
    tolerance, i.e. when the system is overdetermined and inconsistent.
    """
    A = _as_matrix(A)
    b = _as_vector(b)
    if A.shape[0] != b.shape[0]:
        raise ValueError(f"shape mismatch: A is {A.shape}, b has length {b.shape[0]}")
    x, *_ = np.linalg.lstsq(A, b, rcond=None)
    residual = float(np.max(np.abs(A @ x - b))) if b.size else 0.0
    scale = max(1.0, float(np.max(np.abs(b))) if b.size else 0.0)
    if residual > tol.abs_tol + tol.rel_tol * scale:
        raise Inconsistent(f"residual {residual:.3e} exceeds tolerance")
    return x


def eigen(A, tol: Tolerance = DEFAULT_TOL) -> list[tuple[complex, np.ndarray]]:
    """Eigenpairs of a square matrix, ordered by descending (real, imag) part.

    Raises :class:`NotDiagonalizable` when the eigenvector matrix is rank
    deficient within tolerance (no full eigenbasis).
    """
    A = _as_matrix(A)
    n, m = A.shape
    if n != m:
        raise ValueError("matrix must be square")
    if n == 0:
        return []
    w, V = np.linalg.eig(A)
    sv = np.linalg.svd(V, compute_uv=False)
    if sv[-1] <= max(tol.abs_tol, 1e3 * np.finfo(float).eps) * sv[0]:
        raise NotDiagonalizable("eigenvector matrix is numerically singular")
    scale = max(1.0, float(np.max(np.abs(A))))
    order = np.lexsort((-w.imag, -w.real))
    pairs = []
    for k in order:
        v = V[:, k]
        res = float(np.max(np.abs(A @ v - w[k] * v)))
        if res > 1e4 * np.finfo(float).eps * scale + tol.abs_tol:
            raise NotDiagonalizable(f"eigenpair residual {res:.3e} too large")
        pairs.append((complex(w[k]), _canonical_phase(v)))
    return pairs


def _canonical_phase(v: np.ndarray) -> np.ndarray:
    """Normalize and rotate so the largest-magnitude entry is real positive."""
    nrm = np.linalg.norm(v)
    if nrm == 0:
        return v
    v = v / nrm
    piv = v[int(np.argmax(np.abs(v)))]
    if abs(piv) > 0:
        v = v * (abs(piv) / piv)
    return v


def orthonormal_basis(vectors, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Orthonormal basis (as columns) of the span of the given vectors."""
    if isinstance(vectors, np.ndarray) and vectors.ndim == 2:
        M = np.asarray(vectors, dtype=complex)
    else:
        vecs = [_as_vector(v) for v in vectors]
        if not vecs:
            return np.zeros((0, 0), dtype=complex)
        M = np.column_stack(vecs)
    if M.shape[1] == 0:
        return M
    U, s, _ = np.linalg.svd(M, full_matrices=False)
    if s.size == 0 or s[0] == 0:
        return np.zeros((M.shape[0], 0), dtype=complex)
    thr = max(tol.abs_tol, s[0] * max(tol.rel_tol, M.shape[0] * np.finfo(float).eps))
    rank = int(np.sum(s > thr))
    Q = U[:, :rank]
    for k in range(rank):
        Q[:, k] = _canonical_phase(Q[:, k])
    return Q


def subspace_contains(big, vectors, tol: Tolerance = DEFAULT_TOL) -> bool:
    """True when every given vector lies in span(big) within tolerance."""
    Q = orthonormal_basis(big, tol)
    for v in _iter_vectors(vectors):
        nrm = np.linalg.norm(v)
        if nrm == 0:
            continue
        res = v - Q @ (Q.conj().T @ v)
        if np.max(np.abs(res)) > tol.abs_tol * 100 + tol.rel_tol * nrm:
            return False
    return True


def _iter_vectors(vectors):
    if isinstance(vectors, np.ndarray) and vectors.ndim == 2:
        return [vectors[:, k] for k in range(vectors.shape[1])]
    return [_as_vector(v) for v in vectors]


def subspace_intersection(B1, B2, tol: Tolerance = DEFAULT_TOL) -> list[np.ndarray]:
    """Orthonormal basis of span(B1) ∩ span(B2), via principal angles."""
    Q1 = orthonormal_basis(B1, tol)
    Q2 = orthonormal_basis(B2, tol)
    if Q1.shape[1] == 0 or Q2.shape[1] == 0:
        return []
    if Q1.shape[0] != Q2.shape[0]:
        raise ValueError("vectors must have equal length")
    U, s, _ = np.linalg.svd(Q1.conj().T @ Q2, full_matrices=False)
    keep = s >= 1.0 - max(100 * tol.abs_tol, 1e-8)
    basis = Q1 @ U[:, keep]
    return [_canonical_phase(basis[:, k]) for k in range(basis.shape[1])]


def snap_integer(x, tol: Tolerance = DEFAULT_TOL) -> int:
    """Nearest integer when x is within snap_tol of one, else raise."""
    xc = complex(x)
    n = round(xc.real)
    if abs(xc.real - n) <= tol.snap_tol and abs(xc.imag) <= tol.snap_tol:
        return int(n)
    raise NotNearInteger(f"{x!r} is not within {tol.snap_tol} of an integer")


def snap_integer_array(arr, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Entrywise integer snapping of an array; raises on the worst offender."""
    arr = np.asarray(arr, dtype=complex)
    rounded = np.round(arr.real)
    dev = np.abs(arr.real - rounded) + np.abs(arr.imag)
    worst = int(np.argmax(dev))
    if dev.flat[worst] > 2 * tol.snap_tol:
        raise NotNearInteger(
            f"entry {arr.flat[worst]!r} at flat index {worst} is not near an integer"
        )
    return rounded.astype(int)


def _commuting_or_raise(mats: Sequence[np.ndarray], tol: Tolerance) -> None:
    for i in range(len(mats)):
        for j in range(i + 1, len(mats)):
            A, B = mats[i], mats[j]
            bound = 10 * (
                tol.abs_tol
                + tol.rel_tol * max(1.0, float(np.max(np.abs(A))) * float(np.max(np.abs(B))))
            )
            if np.max(np.abs(A @ B - B @ A)) > bound:
                raise NotCommuting(f"matrices {i} and {j} do not commute within tolerance")


def _cluster_indices(values: np.ndarray, ctol: float) -> list[np.ndarray]:
    """Group indices of near-equal complex values; clusters in descending order."""
    order = np.lexsort((-values.imag, -values.real))
    clusters: list[list[int]] = []
    reps: list[complex] = []
    for idx in order:
        v = values[idx]
        placed = False
        for c, rep in enumerate(reps):
            if abs(v - rep) <= ctol:
                clusters[c].append(int(idx))
                placed = True
                break
        if not placed:
            clusters.append([int(idx)])
            reps.append(v)
    return [np.array(c) for c in clusters]


def _split_space(V: np.ndarray, A: np.ndarray, tol: Tolerance) -> list[np.ndarray]:
    """Split an invariant subspace by the eigenspaces of A restricted to it.

    Returns [V] unchanged when A acts as a scalar on V; raises _SplitFailed
    when A is non-scalar but its restricted eigenvalues cannot be separated.
    """
    k = V.shape[1]
    Ap = V.conj().T @ A @ V
    mu = np.trace(Ap) / k
    scale = max(1.0, float(np.max(np.abs(Ap))))
    if np.max(np.abs(Ap - mu * np.eye(k))) <= max(tol.abs_tol, 1e-9 * scale):
        return [V]
    w, U = np.linalg.eig(Ap)
    ctol = max(tol.abs_tol, 1e-7 * max(1.0, float(np.max(np.abs(w)))))
    clusters = _cluster_indices(w, ctol)
    if len(clusters) == 1:
        raise _SplitFailed("non-scalar action with unsplittable spectrum")
    return [orthonormal_basis(V @ U[:, c], tol) for c in clusters]


def _refine(V: np.ndarray, mats: Sequence[np.ndarray], tol: Tolerance) -> list[np.ndarray]:
    if V.shape[1] == 1:
        return [V]
    for A in mats:
        pieces = _split_space(V, A, tol)
        if len(pieces) > 1:
            out = []
            for piece in pieces:
                out.extend(_refine(piece, mats, tol))
            return out
    return [V]


def _verify_joint(spaces: Sequence[np.ndarray], mats: Sequence[np.ndarray], tol: Tolerance) -> None:
    for V in spaces:
        k = V.shape[1]
        for A in mats:
            Ap = V.conj().T @ A @ V
            mu = np.trace(Ap) / k
            bound = 10 * tol.abs_tol * max(1.0, float(np.max(np.abs(A))))
            if np.max(np.abs(Ap - mu * np.eye(k))) > bound:
                raise _SplitFailed("joint eigenspace verification failed (non-scalar)")
            if np.max(np.abs(A @ V - V @ Ap)) > bound:
                raise _SplitFailed("joint eigenspace verification failed (not invariant)")


def joint_eigenspaces(
    mats, seed: int = 0, tol: Tolerance = DEFAULT_TOL
) -> list[np.ndarray]:
    """Joint eigenspace decomposition of a commuting diagonalizable family.

    Eigendecomposes a seeded random real linear combination, then refines any
    degenerate cluster recursively with the individual matrices.  Each
    returned array holds an orthonormal basis of one maximal joint eigenspace
    (every input matrix acts on it as a scalar).  Deterministic given seed.
    """
    mats = [_as_matrix(M) for M in mats]
    if not mats:
        raise ValueError("need at least one matrix")
    n = mats[0].shape[0]
    for M in mats:
        if M.shape != (n, n):
            raise ValueError("all matrices must be square of equal dimension")
    if n == 0:
        return []
    _commuting_or_raise(mats, tol)
    last = None
    for attempt in range(_MAX_SEED_TRIES):
        rng = np.random.default_rng(seed + attempt)
        coeffs = rng.standard_normal(len(mats))
        Y = sum(c * M for c, M in zip(coeffs, mats))
        try:
            w, U = np.linalg.eig(Y)
            ctol = max(tol.abs_tol, 1e-7 * max(1.0, float(np.max(np.abs(w)))))
            spaces: list[np.ndarray] = []
            for c in _cluster_indices(w, ctol):
                V = orthonormal_basis(U[:, c], tol)
                if V.shape[1] != len(c):
                    raise _SplitFailed("eigenvector cluster is rank deficient")
                spaces.extend(_refine(V, mats, tol))
            if sum(V.shape[1] for V in spaces) != n:
                raise _SplitFailed("joint eigenspaces do not fill the space")
            _verify_joint(spaces, mats, tol)
            return spaces
        except _SplitFailed as exc:
            last = exc
    raise DegenerateSeed(f"no seed in [{seed}, {seed + _MAX_SEED_TRIES}) split cleanly: {last}")


def common_eigenbasis(mats, seed: int = 0, tol: Tolerance = DEFAULT_TOL) -> list[np.ndarray]:
    """Basis of simultaneous eigenvectors of a commuting family.

    Columns of the joint eigenspaces in deterministic order; every returned
    vector is an eigenvector of every input matrix.
    """
    spaces = joint_eigenspaces(mats, seed=seed, tol=tol)
    return [spaces[j][:, k] for j in range(len(spaces)) for k in range(spaces[j].shape[1])]
