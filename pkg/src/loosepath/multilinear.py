"""Tensor-vector products and eigenpair residuals for loose-path operators.

The adjacency tensor of a k-uniform hypergraph carries 1/(k-1)! on every
permutation of every edge.  Contracting it against x in all but one slot
collapses, per edge, to a plain product over the edge's other vertices:
the (k-1)! permutations cancel the normalization exactly.  This module
evaluates that closed form; the factorial-cost permutation sum lives only
in the test suite as an independent oracle.
"""

import enum
from dataclasses import dataclass, field

import numpy as np

from .hypergraph import LoosePath, degrees


class TensorKind(enum.Enum):
    ADJACENCY = "adjacency"
    LAPLACIAN = "laplacian"
    SIGNLESS_LAPLACIAN = "signless_laplacian"


@dataclass(frozen=True, eq=False)
class Eigenpair:
    """An eigenvalue with a residual-verified witness eigenvector.

    The witness is normalized to max |x_i| = 1.  case_id is the primary
    provenance tag; case_ids lists every tag merged into this value by
    deduplication.
    """

    lam: float
    x: np.ndarray
    residual: float
    case_id: str
    case_ids: tuple = field(default=())

    def to_dict(self) -> dict:
        return {
            "lambda": self.lam,
            "x": [float(v) for v in self.x],
            "residual": self.residual,
            "case_id": self.case_id,
            "case_ids": list(self.case_ids) or [self.case_id],
        }


def _adjacency_apply(path: LoosePath, x: np.ndarray) -> np.ndarray:
    out = np.zeros(path.n)
    for e in path.edge_arrays():
        xe = x[e]
        k = xe.size
        # leave-one-out products via prefix/suffix scans; no division,
        # so zero entries are handled exactly
        pre = np.ones(k)
        suf = np.ones(k)
        for i in range(1, k):
            pre[i] = pre[i - 1] * xe[i - 1]
        for i in range(k - 2, -1, -1):
            suf[i] = suf[i + 1] * xe[i + 1]
        out[e] += pre * suf
    return out


def apply(kind: TensorKind, path: LoosePath, x) -> np.ndarray:
    """Evaluate (T x^{k-1})_i for T the selected operator of the path.

    For the adjacency tensor, component i sums the product of x over the
    co-edge vertices of every edge containing i.  The Laplacian subtracts
    that from d_i x_i^{k-1}; the signless Laplacian adds it.

    Raises:
        ValueError: if x does not have length n.
    """
    x = np.asarray(x, dtype=float)
    if x.shape != (path.n,):
        raise ValueError(f"vector has shape {x.shape}, expected ({path.n},)")
    adj = _adjacency_apply(path, x)
    if kind is TensorKind.ADJACENCY:
        return adj
    diag = degrees(path) * x ** (path.k - 1)
    if kind is TensorKind.LAPLACIAN:
        return diag - adj
    if kind is TensorKind.SIGNLESS_LAPLACIAN:
        return diag + adj
    raise ValueError(f"unknown tensor kind: {kind!r}")


def eig_residual(path: LoosePath, lam: float, x) -> float:
    """Infinity-norm residual of the Laplacian eigenvalue system at (lam, x).

    x is first normalized to max |x_i| = 1, making the result invariant
    under nonzero rescaling of x.  The denominator keeps a unit floor so
    the quotient cannot blow up when x_i^{k-1} underflows at large k.

    Returns 0 exactly when (L x^{k-1})_i = lam * x_i^{k-1} for all i.

    Raises:
        ValueError: if x is the zero vector (or has the wrong length).
    """
    x = np.asarray(x, dtype=float)
    if x.shape != (path.n,):
        raise ValueError(f"vector has shape {x.shape}, expected ({path.n},)")
    scale = float(np.max(np.abs(x)))
    if scale == 0.0:
        raise ValueError("eigenvector must be nonzero")
    xn = x / scale
    lhs = apply(TensorKind.LAPLACIAN, path, xn)
    rhs = lam * xn ** (path.k - 1)
    denom = max(1.0, float(np.max(np.abs(xn))) ** (path.k - 1))
    return float(np.max(np.abs(lhs - rhs)) / denom)
