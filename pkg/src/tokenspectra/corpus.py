"""Reproducible graph corpora: the exhaustive small-graph atlas and seeded samples."""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .graphs import Graph, erdos_renyi


@lru_cache(maxsize=1)
def _atlas() -> tuple[Graph, ...]:
    import networkx as nx

    out = []
    for h in nx.graph_atlas_g():
        out.append(Graph(h.number_of_nodes(),
                         frozenset((min(u, v) + 1, max(u, v) + 1) for u, v in h.edges())))
    return tuple(out)


def atlas(max_n: int = 7, min_n: int = 1, connected: bool = False) -> list[Graph]:
    """Every graph on min_n..max_n vertices, one per isomorphism class (max_n <= 7)."""
    if max_n > 7:
        raise ValueError("the graph atlas stops at 7 vertices")
    return [g for g in _atlas()
            if min_n <= g.n <= max_n and (not connected or g.is_connected())]


def sample_graphs(count: int, n_min: int, n_max: int, seed: int,
                  connected: bool = False, p_range=(0.2, 0.8)) -> list[Graph]:
    """Seeded G(n, p) samples with n and p drawn per graph from a PCG64 stream.

    Disconnected draws are discarded (not counted) when ``connected`` is set.
    """
    rng = np.random.Generator(np.random.PCG64(seed))
    out = []
    while len(out) < count:
        n = int(rng.integers(n_min, n_max + 1))
        p = float(rng.uniform(*p_range))
        g = erdos_renyi(n, p, seed=int(rng.integers(2**63)))
        if connected and not g.is_connected():
            continue
        out.append(g)
    return out
