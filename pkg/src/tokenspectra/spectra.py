"""Symmetric eigendecomposition, clustered spectra, and the non-trivial part of L_k."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from threadpoolctl import threadpool_limits

from .errors import ConsistencyError, NumericalError, ValidationError
from .graphs import Graph
from .guard import check_dim
from .lifting import LiftOperator, kernel_basis
from .tokens import token_laplacian


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalue multiset as ``(value, multiplicity)`` pairs, values increasing."""

    entries: tuple[tuple[float, int], ...]
    tol: float = 0.0

    @property
    def dim(self) -> int:
        return sum(m for _, m in self.entries)

    @property
    def values(self) -> np.ndarray:
        """The multiset expanded to a sorted array."""
        return np.array([v for v, m in self.entries for _ in range(m)], dtype=float)

    @property
    def min(self) -> float:
        return self.entries[0][0]

    @property
    def max(self) -> float:
        return self.entries[-1][0]

    def multiplicity(self, value: float, tol: float | None = None) -> int:
        tol = self.tol if tol is None else tol
        return sum(m for v, m in self.entries if abs(v - value) <= tol)

    def format(self, digits: int = 12) -> str:
        return "; ".join(f"{fmt_value(v, self.tol, digits)} ×{m}" for v, m in self.entries)

    def __str__(self):
        return self.format()


def fmt_value(v: float, tol: float = 0.0, digits: int = 12) -> str:
    if abs(v) <= tol:
        v = 0.0
    s = f"{v:.{digits}g}"
    return "0" if s == "-0" else s


@dataclass(frozen=True)
class Eigenpair:
    value: float
    vector: np.ndarray


def default_tol(m) -> float:
    """1e-8 * max(1, ||M||_inf)."""
    m = np.asarray(m)
    norm = float(np.abs(m).sum(axis=1).max()) if m.size else 0.0
    return 1e-8 * max(1.0, norm)


def _check_symmetric(m: np.ndarray, tol: float | None) -> np.ndarray:
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValidationError(f"expected a square matrix, got shape {m.shape}")
    if m.size:
        asym = float(np.abs(m - m.T).max())
        limit = 1e-12 * max(1.0, float(np.abs(m).max())) if tol is None else tol
        if asym > limit:
            raise ValidationError(f"matrix is not symmetric (max asymmetry {asym:.3g})")
    return m


def eig_sym(m, tol: float | None = None, max_dim: int | None = None) -> list[Eigenpair]:
    """Full eigendecomposition of a real symmetric matrix, ascending.

    LAPACK's divide-and-conquer driver (``syevd``) under a single BLAS
    thread, so identical input gives bitwise-identical output.
    """
    m = _check_symmetric(m, tol)
    check_dim(m.shape[0], max_dim, what="eigenproblem")
    try:
        with threadpool_limits(limits=1):
            w, v = np.linalg.eigh(m)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"symmetric eigensolver did not converge: {exc}") from exc
    return [Eigenpair(float(w[i]), v[:, i]) for i in range(len(w))]


def eigvals_sym(m, tol: float | None = None, max_dim: int | None = None) -> np.ndarray:
    m = _check_symmetric(m, tol)
    check_dim(m.shape[0], max_dim, what="eigenproblem")
    try:
        with threadpool_limits(limits=1):
            return np.linalg.eigvalsh(m)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"symmetric eigensolver did not converge: {exc}") from exc


def cluster(values, tol: float) -> Spectrum:
    """Greedy left-to-right clustering; a value joins the current cluster
    when within ``tol`` of the cluster's running mean."""
    entries = []
    total, count = 0.0, 0
    for x in values:
        x = float(x)
        if count and abs(x - total / count) <= tol:
            total += x
            count += 1
            continue
        if count:
            entries.append((total / count, count))
        total, count = x, 1
    if count:
        entries.append((total / count, count))
    return Spectrum(tuple(entries), tol)


def spectrum_contains(outer: Spectrum, inner: Spectrum, tol: float | None = None):
    """``(True, None)`` if inner ⊆ outer as multisets, else ``(False, (value, mult))``
    for the first inner entry that has no match."""
    tol = max(outer.tol, inner.tol) if tol is None else tol
    for value, mult in inner.entries:
        near = [(abs(v - value), m) for v, m in outer.entries if abs(v - value) <= tol]
        if not near or min(near)[1] < mult:
            return False, (value, mult)
    return True, None


def multiset_deviation(a, b) -> float:
    """Largest gap between two equal-size sorted multisets; inf if sizes differ."""
    a, b = np.sort(np.asarray(a, dtype=float)), np.sort(np.asarray(b, dtype=float))
    if a.shape != b.shape:
        return float("inf")
    return float(np.abs(a - b).max()) if a.size else 0.0


# --- L_k spectra ----------------------------------------------------------

def token_eigenvalues(g: Graph, k: int, max_dim: int | None = None) -> np.ndarray:
    return eigvals_sym(token_laplacian(g, k, max_dim), max_dim=max_dim)


def token_spectrum(g: Graph, k: int, tol: float | None = None,
                   max_dim: int | None = None) -> Spectrum:
    lap = token_laplacian(g, k, max_dim)
    tol = default_tol(lap) if tol is None else tol
    return cluster(eigvals_sym(lap, max_dim=max_dim), tol)


def _check_nontrivial_k(g: Graph, k: int) -> None:
    if not 1 <= k <= g.n // 2:
        raise ValidationError(f"non-trivial spectrum needs 1 <= k <= floor(n/2), got n={g.n}, k={k}")


def restricted_operator(g: Graph, k: int, max_dim: int | None = None) -> tuple[np.ndarray, np.ndarray]:
    """``(P, P^T L_k P)`` with P an orthonormal basis of Ker(B^T_{n,k,k-1})."""
    _check_nontrivial_k(g, k)
    lap = token_laplacian(g, k, max_dim).astype(float)
    p = kernel_basis(g.n, k, max_dim=max_dim)
    m = p.T @ lap @ p
    return p, (m + m.T) / 2


def nontrivial_eigenvalues(g: Graph, k: int, max_dim: int | None = None) -> np.ndarray:
    _, m = restricted_operator(g, k, max_dim)
    return eigvals_sym(m, max_dim=max_dim)


def nontrivial_spectrum(g: Graph, k: int, tol: float | None = None,
                        max_dim: int | None = None) -> Spectrum:
    """Spectrum of L_k restricted to Ker(B^T_{n,k,k-1}).

    Together with the spectrum of L_{k-1} (which L_k carries on Im B)
    this is the whole spectrum of L_k.
    """
    _check_nontrivial_k(g, k)
    if tol is None:
        tol = default_tol(token_laplacian(g, k, max_dim))
    return cluster(nontrivial_eigenvalues(g, k, max_dim), tol)


def nontrivial_eigenpairs(g: Graph, k: int, max_dim: int | None = None) -> list[Eigenpair]:
    """Eigenpairs of L_k whose vectors lie in Ker(B^T_{n,k,k-1})."""
    p, m = restricted_operator(g, k, max_dim)
    return [Eigenpair(e.value, p @ e.vector) for e in eig_sym(m)]


def lambda_max(g: Graph, k: int, max_dim: int | None = None) -> float:
    """Largest eigenvalue of L_k(G)."""
    return float(token_eigenvalues(g, k, max_dim)[-1])


def lambda_min_nontrivial(g: Graph, k: int, max_dim: int | None = None) -> float:
    """Smallest non-trivial eigenvalue of L_k(G).

    The minimizing eigenvector is lifted back to R^{C(n,k)} and its
    Rayleigh quotient and kernel membership are re-checked against L_k.
    """
    pairs = nontrivial_eigenpairs(g, k, max_dim)
    low = pairs[0]
    lap = token_laplacian(g, k, max_dim).astype(float)
    phi = low.vector
    scale = max(1.0, float(np.abs(lap).sum(axis=1).max()))
    rq = float(phi @ lap @ phi / (phi @ phi))
    kern = float(np.linalg.norm(LiftOperator(g.n, k, k - 1).apply_t(phi)))
    if abs(rq - low.value) > 1e-9 * scale or kern > 1e-9 * np.sqrt(len(phi)):
        raise ConsistencyError(f"minimal non-trivial eigenvector fails re-check "
                               f"(rayleigh gap {abs(rq - low.value):.3g}, kernel residual {kern:.3g})")
    return low.value


def lambda_2(g: Graph, k: int = 1, max_dim: int | None = None) -> float:
    """Second-smallest eigenvalue of L_k(G) (0 for a one-vertex token graph)."""
    w = token_eigenvalues(g, k, max_dim)
    return float(w[1]) if len(w) > 1 else 0.0

