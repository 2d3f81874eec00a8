"""Random graph models: W-random graphs, Erdos-Renyi, uniform attachment.

Each model consumes its own derived PCG64 stream (see streams.py), with a
documented draw order, so a (model, parameters, seed) triple pins the
output graph exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import streams
from .graphs import Graph
from .graphons import StepGraphon, block_indices


def _graph_from_pairs(n: int, iu, iv, hit) -> Graph:
    return Graph.from_edges(n, zip(iu[hit].tolist(), iv[hit].tolist()))


def w_random_graph(w: StepGraphon, n: int, seed: int) -> Graph:
    """Sample an n-vertex graph from a step graphon.

    Draw order: n uniform sample points first, which are then sorted so
    vertex labels follow the [0,1] order; then one uniform per pair
    (i, j), i < j, in lexicographic order, each compared against
    w(s_i, s_j).  Sorting makes the pixel picture of the sample line up
    with the graphon without any relabeling search.
    """
    if n < 1:
        raise ValueError("sample size must be at least 1")
    rng = streams.substream(seed, streams.W_RANDOM)
    points = np.sort(rng.random(n))
    idx = block_indices(w, points)
    iu, iv = np.triu_indices(n, 1)
    probs = w.weights[idx[iu], idx[iv]]
    hit = rng.random(probs.size) < probs
    return _graph_from_pairs(n, iu, iv, hit)


def erdos_renyi(n: int, p: float, seed: int) -> Graph:
    """G(n, p): one uniform per pair (i, j), i < j, in lexicographic order."""
    if n < 1:
        raise ValueError("sample size must be at least 1")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must lie in [0,1], got {p}")
    rng = streams.substream(seed, streams.ERDOS_RENYI)
    iu, iv = np.triu_indices(n, 1)
    hit = rng.random(iu.size) < p
    return _graph_from_pairs(n, iu, iv, hit)


def uniform_attachment(n: int, seed: int) -> Graph:
    """Growing uniform attachment graph on n vertices.

    Starts from a single vertex.  Step t (t = 2..n) first adds vertex
    t-1, then sweeps once over every pair that was non-adjacent at the
    start of the step, in lexicographic order, joining each independently
    with probability 1/t.
    """
    if n < 1:
        raise ValueError("graph size must be at least 1")
    rng = streams.substream(seed, streams.UNIFORM_ATTACHMENT)
    adj = np.zeros((n, n), dtype=bool)
    for t in range(2, n + 1):
        iu, iv = np.triu_indices(t, 1)
        open_pairs = ~adj[iu, iv]
        draws = rng.random(int(open_pairs.sum()))
        hit = draws < 1.0 / t
        rows = iu[open_pairs][hit]
        cols = iv[open_pairs][hit]
        adj[rows, cols] = True
        adj[cols, rows] = True
    iu, iv = np.triu_indices(n, 1)
    return _graph_from_pairs(n, iu, iv, adj[iu, iv])


# ───────────────────────── configuration ─────────────────────────


@dataclass(frozen=True)
class SampleConfig:
    """One sampling request: which model, how many vertices, which seed.

    model is "w-random" (needs graphon), "erdos-renyi" (needs p), or
    "uniform-attachment".
    """

    model: str
    n: int
    seed: int
    p: float | None = None
    graphon: StepGraphon | None = None

    def __post_init__(self):
        if self.model not in ("w-random", "erdos-renyi", "uniform-attachment"):
            raise ValueError(f"unknown model {self.model!r}")
        if self.n < 1:
            raise ValueError("sample size must be at least 1")
        streams.check_seed(self.seed)
        if self.model == "erdos-renyi" and self.p is None:
            raise ValueError("erdos-renyi needs an edge probability p")
        if self.model == "w-random" and self.graphon is None:
            raise ValueError("w-random needs a graphon")


def sample_graph(config: SampleConfig) -> Graph:
    if config.model == "w-random":
        return w_random_graph(config.graphon, config.n, config.seed)
    if config.model == "erdos-renyi":
        return erdos_renyi(config.n, config.p, config.seed)
    return uniform_attachment(config.n, config.seed)
