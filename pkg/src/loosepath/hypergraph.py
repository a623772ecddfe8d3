"""k-uniform loose paths: chains of k-vertex edges, consecutive edges sharing one vertex."""

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class LoosePath:
    """A k-uniform loose path of length d.

    Vertices are labeled 1..n with n = d(k-1)+1.  Edge i covers the k
    consecutive labels (i-1)(k-1)+1 .. (i-1)(k-1)+k, so edge i and edge
    i+1 share exactly the vertex i(k-1)+1 and non-adjacent edges are
    disjoint.  Instances are immutable and safe to share across threads.
    """

    k: int
    d: int
    n: int
    edges: tuple  # tuple of d tuples, each with k ascending 1-based labels

    def edge_arrays(self):
        """Edges as 0-based numpy index arrays (internal convenience)."""
        return [np.asarray(e, dtype=np.intp) - 1 for e in self.edges]


def build_loose_path(k: int, d: int) -> LoosePath:
    """Construct the loose path with uniformity k and length d.

    Args:
        k: edge size, at least 3.
        d: number of edges, at least 1.

    Returns:
        The LoosePath on n = d(k-1)+1 vertices with the canonical labeling
        {1..k}, {k..2k-1}, ...

    Raises:
        ValueError: if k < 3 or d < 1.
    """
    if k < 3:
        raise ValueError(f"uniformity k must be >= 3, got {k}")
    if d < 1:
        raise ValueError(f"length d must be >= 1, got {d}")
    n = d * (k - 1) + 1
    edges = tuple(
        tuple(range(i * (k - 1) + 1, i * (k - 1) + k + 1)) for i in range(d)
    )
    return LoosePath(k=k, d=d, n=n, edges=edges)


def degrees(path: LoosePath) -> np.ndarray:
    """Vertex degrees; entry v-1 is the number of edges containing vertex v.

    The d-1 intersection vertices (labels k, 2k-1, ...) have degree 2,
    every other vertex degree 1; the degrees sum to d*k.
    """
    deg = np.zeros(path.n, dtype=np.int64)
    for e in path.edges:
        for v in e:
            deg[v - 1] += 1
    return deg
