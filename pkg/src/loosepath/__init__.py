"""Laplacian H-spectra of k-uniform loose paths of length three.

Computes every H-eigenvalue of the Laplacian tensor of G_{k,3} by
bracketed bisection of the catalog case equations, reconstructs a witness
eigenvector for each root from the proven block structure, and verifies
every eigenpair against a direct tensor-apply residual.
"""

from .hypergraph import LoosePath, build_loose_path, degrees
from .multilinear import Eigenpair, TensorKind, apply, eig_residual
from .cases import (
    CaseEquation,
    CaseId,
    EVEN_TAGS,
    ODD_TAGS,
    case_catalog,
    eval_case,
    find_case,
)
from .rootfind import BracketError, Root, RootCountError, bisect, isolate
from .spectrum import (
    CaseResult,
    ReconstructionError,
    SpectrumReport,
    compute_spectrum,
    dedup,
    reconstruct_eigenvector,
    DEDUP_TOL,
    RESIDUAL_TOL,
)
from .asymptotics import (
    LIMIT_POINTS,
    LEMMA_SEQUENCES,
    SequenceCheck,
    SweepRow,
    cluster_distances,
    nearest_limit,
    sequence,
    sweep,
)

__version__ = "0.1.0"

__all__ = [
    "LoosePath", "build_loose_path", "degrees",
    "Eigenpair", "TensorKind", "apply", "eig_residual",
    "CaseEquation", "CaseId", "EVEN_TAGS", "ODD_TAGS",
    "case_catalog", "eval_case", "find_case",
    "BracketError", "Root", "RootCountError", "bisect", "isolate",
    "CaseResult", "ReconstructionError", "SpectrumReport",
    "compute_spectrum", "dedup", "reconstruct_eigenvector",
    "DEDUP_TOL", "RESIDUAL_TOL",
    "LIMIT_POINTS", "LEMMA_SEQUENCES", "SequenceCheck", "SweepRow",
    "cluster_distances", "nearest_limit", "sequence", "sweep",
    "__version__",
]
