"""Independent brute-force oracles for the tensor operators.

The adjacency entry is taken straight from its raw definition: 1/(k-1)!
on every ordered index tuple whose underlying set is an edge, zero
otherwise.  Evaluation loops over all n^(k-1) tuples per component, so
this is only usable at tiny sizes; it shares no code with the production
closed form.
"""

import math
from itertools import product

import numpy as np

from loosepath import LoosePath, TensorKind, degrees


def naive_apply(kind: TensorKind, path: LoosePath, x) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    n, k = path.n, path.k
    edge_sets = {frozenset(e) for e in path.edges}
    inv_fact = 1.0 / math.factorial(k - 1)
    adj = np.zeros(n)
    for i in range(1, n + 1):
        total = 0.0
        for tup in product(range(1, n + 1), repeat=k - 1):
            idx = frozenset((i,) + tup)
            if len(idx) == k and idx in edge_sets:
                term = inv_fact
                for j in tup:
                    term *= x[j - 1]
                total += term
        adj[i - 1] = total
    if kind is TensorKind.ADJACENCY:
        return adj
    diag = degrees(path) * x ** (k - 1)
    if kind is TensorKind.LAPLACIAN:
        return diag - adj
    return diag + adj
