"""Token graphs F_k(G), their degrees, internal-edge counts, and restrictions."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .combinatorics import binomial, check_subset, rank_rows, subset_array
from .errors import ValidationError
from .graphs import Graph
from .guard import check_dim


@dataclass(frozen=True)
class TokenGraph:
    """F_k(base). Vertex ``i + 1`` of ``graph`` is the k-subset of colex rank ``i``."""

    base: Graph
    k: int
    graph: Graph
    edge_index: np.ndarray  # (|E_k|, 2) zero-based colex ranks, each row sorted

    @property
    def dim(self) -> int:
        return self.graph.n

    def subsets(self) -> np.ndarray:
        return subset_array(self.base.n, self.k)

    def laplacian(self) -> np.ndarray:
        return edge_laplacian(self.dim, self.edge_index)


def edge_laplacian(dim: int, edge_index: np.ndarray) -> np.ndarray:
    lap = np.zeros((dim, dim), dtype=np.int64)
    if len(edge_index):
        a, b = edge_index[:, 0], edge_index[:, 1]
        lap[a, b] = -1
        lap[b, a] = -1
        deg = np.bincount(edge_index.ravel(), minlength=dim)
        lap[np.diag_indices(dim)] = deg
    return lap


def _check_k(g: Graph, k: int) -> None:
    if not 0 <= k <= g.n:
        raise ValidationError(f"need 0 <= k <= n, got k={k}, n={g.n}")


def token_edges(g: Graph, k: int) -> np.ndarray:
    """Edges of F_k(G) as sorted zero-based rank pairs.

    Every edge {A, B} has a unique (eta, {v, w}) with eta = A ∩ B and
    A △ B = {v, w} in E(G), so iterating over (k-1)-sets and base edges
    yields each token edge exactly once.
    """
    _check_k(g, k)
    n = g.n
    if k == 0 or g.m == 0:
        return np.zeros((0, 2), dtype=np.int64)
    etas = subset_array(n, k - 1)
    chunks = []
    for v, w in g.sorted_edges():
        keep = ~((etas == v) | (etas == w)).any(axis=1)
        rows = etas[keep]
        col_v = np.full((len(rows), 1), v, dtype=np.int64)
        col_w = np.full((len(rows), 1), w, dtype=np.int64)
        ra = rank_rows(np.sort(np.hstack([rows, col_v]), axis=1), n)
        rb = rank_rows(np.sort(np.hstack([rows, col_w]), axis=1), n)
        chunks.append(np.column_stack([np.minimum(ra, rb), np.maximum(ra, rb)]))
    edges = np.vstack(chunks)
    order = np.lexsort((edges[:, 1], edges[:, 0]))
    return edges[order]


def token_graph(g: Graph, k: int, max_dim: int | None = None) -> TokenGraph:
    _check_k(g, k)
    dim = binomial(g.n, k)
    check_dim(dim, max_dim, what=f"F_{k}")
    idx = token_edges(g, k)
    tg = Graph(dim, frozenset(map(tuple, (idx + 1).tolist())))
    return TokenGraph(g, k, tg, idx)


def token_laplacian(g: Graph, k: int, max_dim: int | None = None) -> np.ndarray:
    """L_k(G) as a dense int64 matrix in colex order."""
    _check_k(g, k)
    dim = binomial(g.n, k)
    check_dim(dim, max_dim, what=f"L_{k}")
    return edge_laplacian(dim, token_edges(g, k))


def token_degree(g: Graph, k: int, sigma) -> int:
    """Number of base edges with exactly one endpoint in sigma."""
    s = set(check_subset(sigma, g.n, k))
    return sum((u in s) != (v in s) for u, v in g.edges)


def internal_edges(g: Graph, sigma) -> int:
    """|E_sigma|, the number of base edges inside sigma."""
    s = set(check_subset(sigma, g.n))
    return sum(u in s and v in s for u, v in g.edges)


def _membership(g: Graph, k: int) -> np.ndarray:
    subs = subset_array(g.n, k)
    member = np.zeros((len(subs), g.n + 1), dtype=bool)
    if k:
        np.put_along_axis(member, subs, True, axis=1)
    return member


def token_degrees(g: Graph, k: int) -> np.ndarray:
    """d_k(sigma) for every k-subset, colex order."""
    _check_k(g, k)
    member = _membership(g, k)
    out = np.zeros(len(member), dtype=np.int64)
    for u, v in g.edges:
        out += member[:, u] ^ member[:, v]
    return out


def internal_edge_counts(g: Graph, k: int) -> np.ndarray:
    """|E_sigma| for every k-subset, colex order."""
    _check_k(g, k)
    member = _membership(g, k)
    out = np.zeros(len(member), dtype=np.int64)
    for u, v in g.edges:
        out += member[:, u] & member[:, v]
    return out


def dk_operator(g: Graph, k: int) -> np.ndarray:
    """Diagonal matrix D_k with |E_sigma| on the diagonal."""
    return np.diag(internal_edge_counts(g, k))


def _facet_ranks(n: int, k: int) -> np.ndarray:
    """``out[i, j]`` = colex rank of subset i with its j-th element removed."""
    subs = subset_array(n, k)
    cols = [rank_rows(np.delete(subs, j, axis=1), n) for j in range(k)]
    return np.column_stack(cols) if cols else np.zeros((len(subs), 0), dtype=np.int64)


def restrict(phi, n: int, k: int, u: int) -> np.ndarray:
    """phi_u over (k-1)-subsets: phi_u(tau) = phi(tau + u) if u not in tau, else 0."""
    return restrict_all(phi, n, k)[u - 1]


def restrict_all(phi, n: int, k: int) -> np.ndarray:
    """Stack of phi_u for u = 1..n, shape ``(n, C(n, k-1))``."""
    phi = np.asarray(phi)
    if k < 1 or k > n:
        raise ValidationError(f"restriction needs 1 <= k <= n, got k={k}, n={n}")
    if phi.shape != (binomial(n, k),):
        raise ValidationError(f"phi has shape {phi.shape}, expected ({binomial(n, k)},)")
    subs = subset_array(n, k)
    facets = _facet_ranks(n, k)
    out = np.zeros((n, binomial(n, k - 1)), dtype=phi.dtype)
    # sigma contributes phi(sigma) to phi_u at sigma - {u}, for each u in sigma
    out[subs - 1, facets] = phi[:, None]
    return out
