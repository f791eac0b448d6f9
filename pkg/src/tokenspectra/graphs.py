"""Simple undirected graphs on [n], their Laplacians, and named families."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .errors import ValidationError

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Simple graph on vertices 1..n. Edges are stored as sorted pairs (u < v)."""

    n: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise ValidationError(f"vertex count must be non-negative, got {self.n}")
        norm = set()
        for e in self.edges:
            u, v = (int(x) for x in e)
            if u == v:
                raise ValidationError(f"self-loop at vertex {u}")
            if u > v:
                u, v = v, u
            if u < 1 or v > self.n:
                raise ValidationError(f"edge ({u}, {v}) outside [1, {self.n}]")
            norm.add((u, v))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        edges = list(edges)
        g = cls(n, frozenset(tuple(e) for e in edges))
        if len(g.edges) != len(edges):
            raise ValidationError("duplicate edges")
        return g

    @property
    def m(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def degrees(self) -> np.ndarray:
        """Degree of vertex v at index v - 1."""
        d = np.zeros(self.n, dtype=np.int64)
        for u, v in self.edges:
            d[u - 1] += 1
            d[v - 1] += 1
        return d

    def adjacency(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for u, v in self.edges:
            a[u - 1, v - 1] = a[v - 1, u - 1] = 1
        return a

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def components(self) -> int:
        parent = list(range(self.n + 1))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in self.edges:
            parent[find(u)] = find(v)
        return len({find(v) for v in range(1, self.n + 1)})

    def is_connected(self) -> bool:
        return self.n > 0 and self.components() == 1

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def laplacian(g: Graph) -> np.ndarray:
    """Integer Laplacian: degrees on the diagonal, -1 on edges."""
    return np.diag(g.degrees()) - g.adjacency()


def complement(g: Graph) -> Graph:
    all_pairs = combinations(range(1, g.n + 1), 2)
    return Graph(g.n, frozenset(e for e in all_pairs if e not in g.edges))


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """G □ H with (u, u') flattened to (u - 1) * h.n + u'."""

    def idx(u, up):
        return (u - 1) * h.n + up

    edges = set()
    for u in range(1, g.n + 1):
        for a, b in h.edges:
            edges.add((idx(u, a), idx(u, b)))
    for up in range(1, h.n + 1):
        for a, b in g.edges:
            edges.add((idx(a, up), idx(b, up)))
    return Graph(g.n * h.n, frozenset(edges))


# --- families -------------------------------------------------------------

def _positive(**kw):
    for name, val in kw.items():
        if not isinstance(val, (int, np.integer)) or val < 1:
            raise ValidationError(f"{name} must be a positive integer, got {val!r}")


def empty(n: int) -> Graph:
    if n < 0:
        raise ValidationError("n must be non-negative")
    return Graph(n)


def complete(n: int) -> Graph:
    _positive(n=n)
    return Graph(n, frozenset(combinations(range(1, n + 1), 2)))


def path(n: int) -> Graph:
    _positive(n=n)
    return Graph(n, frozenset((i, i + 1) for i in range(1, n)))


def cycle(n: int) -> Graph:
    _positive(n=n)
    if n < 3:
        raise ValidationError("cycle needs n >= 3")
    return Graph(n, frozenset([(i, i + 1) for i in range(1, n)] + [(1, n)]))


def disjoint_cliques(m: int, s: int) -> Graph:
    """m disjoint copies of K_s; clique i occupies vertices i*s+1 .. (i+1)*s."""
    _positive(m=m, s=s)
    edges = set()
    for i in range(m):
        edges.update(combinations(range(i * s + 1, (i + 1) * s + 1), 2))
    return Graph(m * s, frozenset(edges))


def complete_multipartite(m: int, s: int) -> Graph:
    """Complete balanced m-partite graph, parts in consecutive blocks of size s.

    Equal to ``complement(disjoint_cliques(m, s))`` vertex for vertex.
    """
    _positive(m=m, s=s)
    n = m * s
    edges = {(u, v) for u, v in combinations(range(1, n + 1), 2)
             if (u - 1) // s != (v - 1) // s}
    return Graph(n, frozenset(edges))


def erdos_renyi(n: int, p: float, seed: int) -> Graph:
    """G(n, p) drawn with numpy's PCG64 generator.

    One uniform double is drawn per vertex pair, pairs visited in
    lexicographic order (1,2), (1,3), ..., (n-1,n); the pair is an edge
    when the draw is < p. PCG64 streams are identical across platforms.
    """
    _positive(n=n)
    if not 0.0 <= p <= 1.0:
        raise ValidationError(f"p must lie in [0, 1], got {p}")
    if seed is None:
        raise ValidationError("erdos_renyi requires an explicit seed")
    rng = np.random.Generator(np.random.PCG64(seed))
    pairs = list(combinations(range(1, n + 1), 2))
    draws = rng.random(len(pairs))
    return Graph(n, frozenset(e for e, x in zip(pairs, draws) if x < p))


FAMILIES = {
    "empty": (empty, ("n",)),
    "complete": (complete, ("n",)),
    "path": (path, ("n",)),
    "cycle": (cycle, ("n",)),
    "disjoint_cliques": (disjoint_cliques, ("m", "s")),
    "complete_multipartite": (complete_multipartite, ("m", "s")),
    "erdos_renyi": (erdos_renyi, ("n", "p", "seed")),
}


def family(name: str, **params) -> Graph:
    try:
        ctor, names = FAMILIES[name]
    except KeyError:
        raise ValidationError(f"unknown family {name!r}; choose from {sorted(FAMILIES)}") from None
    missing = [p for p in names if params.get(p) is None]
    if missing:
        raise ValidationError(f"family {name!r} needs parameters {missing}")
    return ctor(**{p: params[p] for p in names})
