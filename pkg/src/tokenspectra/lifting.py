"""Inclusion operators B_{n,k,l} between l-subsets and k-subsets of [n].

``(B x)(sigma) = sum of x(eta) over l-subsets eta of sigma``. The operator
is applied through a per-row table of sub-subset ranks; a dense matrix is
built only where a factorization needs it (``kernel_basis``) or as an
independent oracle (``dense_lift_matrix``).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

import numpy as np

from .combinatorics import binomial, enumerate_subsets, rank_rows, subset_array
from .errors import ConsistencyError, ValidationError
from .graphs import Graph
from .guard import check_dim
from .tokens import restrict_all, token_laplacian


@lru_cache(maxsize=64)
def _incidence(n: int, k: int, l: int) -> np.ndarray:
    subs = subset_array(n, k)
    cols = [rank_rows(subs[:, list(c)], n) for c in combinations(range(k), l)]
    table = np.column_stack(cols)
    table.setflags(write=False)
    return table


@dataclass(frozen=True)
class LiftOperator:
    n: int
    k: int
    l: int

    def __post_init__(self):
        if not 0 <= self.l <= self.k <= self.n:
            raise ValidationError(f"need 0 <= l <= k <= n, got n={self.n}, k={self.k}, l={self.l}")

    @property
    def shape(self) -> tuple[int, int]:
        return binomial(self.n, self.k), binomial(self.n, self.l)

    def apply(self, x) -> np.ndarray:
        x = np.asarray(x)
        if x.shape[:1] != (self.shape[1],):
            raise ValidationError(f"B_{{{self.n},{self.k},{self.l}}} expects length {self.shape[1]}, got {x.shape}")
        return x[_incidence(self.n, self.k, self.l)].sum(axis=1)

    def apply_t(self, y) -> np.ndarray:
        y = np.asarray(y)
        if y.shape[:1] != (self.shape[0],):
            raise ValidationError(f"B^T_{{{self.n},{self.k},{self.l}}} expects length {self.shape[0]}, got {y.shape}")
        table = _incidence(self.n, self.k, self.l)
        out = np.zeros((self.shape[1],) + y.shape[1:], dtype=y.dtype)
        for j in range(table.shape[1]):
            np.add.at(out, table[:, j], y)
        return out

    def dense(self) -> np.ndarray:
        m = np.zeros(self.shape, dtype=np.int64)
        table = _incidence(self.n, self.k, self.l)
        rows = np.repeat(np.arange(self.shape[0]), table.shape[1])
        m[rows, table.ravel()] = 1
        return m


def apply_B(b: LiftOperator, x) -> np.ndarray:
    return b.apply(x)


def apply_Bt(b: LiftOperator, y) -> np.ndarray:
    return b.apply_t(y)


def dense_lift_matrix(n: int, k: int, l: int) -> np.ndarray:
    """B_{n,k,l} built entry by entry from set inclusion (test oracle)."""
    rows = enumerate_subsets(n, k)
    cols = enumerate_subsets(n, l)
    return np.array([[int(set(eta) <= set(sigma)) for eta in cols] for sigma in rows],
                    dtype=np.int64).reshape(len(rows), len(cols))


def commutation_residual(g: Graph, k: int, max_dim: int | None = None) -> int:
    """max |B L_{k-1} - L_k B| in exact integer arithmetic."""
    if not 1 <= k <= g.n:
        raise ValidationError(f"need 1 <= k <= n, got k={k}, n={g.n}")
    check_dim(binomial(g.n, k), max_dim, what=f"L_{k}")
    b = LiftOperator(g.n, k, k - 1).dense()
    diff = b @ token_laplacian(g, k - 1) - token_laplacian(g, k) @ b
    return int(np.abs(diff).max()) if diff.size else 0


@lru_cache(maxsize=32)
def _kernel_basis(n: int, k: int, rank_tol: float) -> np.ndarray:
    b = LiftOperator(n, k, k - 1).dense().astype(float)
    rows, cols = b.shape
    q, r = np.linalg.qr(b, mode="complete")
    scale = np.linalg.norm(b, axis=0).max()
    pivots = np.abs(np.diag(r))
    rank = int((pivots > rank_tol * scale).sum())
    if rank != cols:
        raise ConsistencyError(
            f"B_{{{n},{k},{k - 1}}} has numerical rank {rank}, expected full column rank {cols}")
    p = q[:, cols:].copy()
    p.setflags(write=False)
    return p


def kernel_basis(n: int, k: int, tol: float = 1e-10, max_dim: int | None = None) -> np.ndarray:
    """Orthonormal columns spanning Ker(B^T_{n,k,k-1}).

    Obtained from a complete Householder QR of the dense B: the first
    C(n,k-1) columns of Q span Im(B), the remaining ones its orthogonal
    complement. The nonzero diagonal of R certifies full column rank.
    """
    if not 1 <= k <= n // 2:
        raise ValidationError(f"kernel_basis needs 1 <= k <= floor(n/2), got n={n}, k={k}")
    check_dim(binomial(n, k), max_dim, what="Ker(B^T) ambient")
    return _kernel_basis(n, k, tol)


def restricted_kernel_residual(phi, n: int, k: int) -> float:
    """max_u ||B^T_{n,k-1,k-2} phi_u||; zero whenever B^T_{n,k,k-1} phi = 0."""
    if k < 2:
        raise ValidationError("restriction kernel check needs k >= 2")
    blocks = restrict_all(phi, n, k)
    bt = LiftOperator(n, k - 1, k - 2)
    return max(float(np.linalg.norm(bt.apply_t(b))) for b in blocks)
