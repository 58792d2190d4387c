"""Seidel matrices, a cyclic Jacobi eigensolver, Seidel energy and switching."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _poly
from .errors import EigenNoConvergence, InvalidVertex, OracleTooLarge
from .graph import Graph

DEFAULT_TOL = 1e-10
MAX_SWEEPS = 100


@dataclass(frozen=True)
class Spectrum:
    eigenvalues: tuple
    residual_tol: float

    def __len__(self):
        return len(self.eigenvalues)

    @property
    def energy(self) -> float:
        return math.fsum(abs(x) for x in self.eigenvalues)


def seidel_matrix(G: Graph) -> np.ndarray:
    """S(G) = J - I - 2A as an integer array."""
    n = G.n
    S = np.ones((n, n), dtype=np.int64) - np.eye(n, dtype=np.int64)
    for u, v in G.edges:
        S[u, v] = S[v, u] = -1
    return S


def _as_symmetric(M) -> np.ndarray:
    M = np.asarray(M)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {M.shape}")
    if not np.array_equal(M, M.T):
        raise ValueError("matrix is not symmetric")
    return M


def jacobi_eigenvalues(M, tol: float = DEFAULT_TOL, max_sweeps: int = MAX_SWEEPS):
    """Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.

    Sweeps stop once the off-diagonal Frobenius norm drops below
    ``tol * ||M||_F``.  Returns the unsorted diagonal and the sweep count.
    """
    A = np.array(_as_symmetric(M), dtype=float)
    n = A.shape[0]
    norm = np.linalg.norm(A)
    if n == 0 or norm == 0.0:
        return np.diag(A).copy(), 0
    target = tol * norm
    for sweep in range(max_sweeps + 1):
        off = float(np.linalg.norm(A - np.diag(np.diag(A))))
        if off <= target:
            return np.diag(A).copy(), sweep
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if abs(apq) <= 1e-30 * norm:
                    A[p, q] = A[q, p] = 0.0
                    continue
                theta = (A[q, q] - A[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(theta, 1.0))
                c = 1.0 / math.hypot(t, 1.0)
                s = t * c
                colp = A[:, p].copy()
                colq = A[:, q]
                A[:, p] = c * colp - s * colq
                A[:, q] = s * colp + c * colq
                rowp = A[p, :].copy()
                rowq = A[q, :]
                A[p, :] = c * rowp - s * rowq
                A[q, :] = s * rowp + c * rowq
                A[p, q] = A[q, p] = 0.0
    raise EigenNoConvergence(
        f"Jacobi did not reach tol={tol} within {max_sweeps} sweeps (n={n})")


def symmetric_eigenvalues(M, tol: float = DEFAULT_TOL) -> Spectrum:
    if tol <= 0:
        raise ValueError("tol must be positive")
    diag, _ = jacobi_eigenvalues(M, tol)
    return Spectrum(tuple(sorted(float(x) for x in diag)), tol)


def seidel_spectrum(G: Graph, tol: float = DEFAULT_TOL) -> Spectrum:
    return symmetric_eigenvalues(seidel_matrix(G), tol)


def seidel_energy(G: Graph, tol: float = DEFAULT_TOL) -> float:
    return seidel_spectrum(G, tol).energy


def seidel_switch(G: Graph, v1) -> Graph:
    """Toggle every adjacency across the cut (v1, V \\ v1)."""
    side = set()
    for v in v1:
        if not (0 <= v < G.n):
            raise InvalidVertex(f"vertex {v} out of range for n={G.n}")
        side.add(v)
    edges = []
    for u in range(G.n):
        for w in range(u + 1, G.n):
            crossing = (u in side) != (w in side)
            if G.has_edge(u, w) != crossing:
                edges.append((u, w))
    return Graph(G.n, edges)


def switching_matrix(n: int, v1) -> np.ndarray:
    """Signature matrix: +1 on v1, -1 on the other side."""
    d = -np.ones(n, dtype=np.int64)
    d[list(v1)] = 1
    return np.diag(d)


# -- exact oracle -------------------------------------------------------------

ORACLE_MAX_DIM = 10


def charpoly_oracle(M) -> list:
    """Exact integer coefficients of det(xI - M), highest degree first.

    Faddeev-LeVerrier in Python integers; every division is exact.
    """
    M = np.asarray(M)
    n = M.shape[0]
    if n > ORACLE_MAX_DIM:
        raise OracleTooLarge(f"oracle limited to dim <= {ORACLE_MAX_DIM}, got {n}")
    if not np.all(M == np.round(M)):
        raise ValueError("oracle needs integer entries")
    A = [[int(M[i, j]) for j in range(n)] for i in range(n)]
    coeffs = [1]
    Mk = [[0] * n for _ in range(n)]
    c = 1
    for k in range(1, n + 1):
        # Mk <- A @ Mk + c I
        Mk = [[sum(A[i][t] * Mk[t][j] for t in range(n)) + (c if i == j else 0)
               for j in range(n)] for i in range(n)]
        tr = sum(A[i][t] * Mk[t][i] for i in range(n) for t in range(n))
        if tr % k:
            raise ArithmeticError("non-exact division in Faddeev-LeVerrier")
        c = -tr // k
        coeffs.append(c)
    return coeffs


def charpoly_roots(coeffs) -> list:
    """Real roots of an integer polynomial with multiplicity, via Sturm bisection."""
    return _poly.real_roots(coeffs)
