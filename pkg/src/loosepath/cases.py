"""Catalog of the characteristic case equations for loose paths of length three.

Every Laplacian H-eigenvalue of G_{k,3} is either one of the fixed values
{0, 1, 2} or a root of one of the scalar case functions below inside its
proven bracket.  Odd k contributes five bracketed entries, even k eleven;
together with the fixed values the catalog has 8 (odd) or 14 (even) entries.
"""

import math
from dataclasses import dataclass
from typing import Callable, List, Optional, Tuple

from . import rootfind

ODD_TAGS = (
    "O-i-zero", "O-i-two", "O-lambda1",
    "O-ii", "O-iii", "O-iv-low", "O-iv-high", "O-v",
)
EVEN_TAGS = (
    "E-i-zero", "E-i-two", "E-lambda1",
    "E-ii-low", "E-ii-high", "E-iii-low", "E-iii-high",
    "E-iv-low", "E-iv-mid", "E-iv-high",
    "E-v", "E-vi-low", "E-vi-high", "E-vii",
)

# Maximum uniformity for direct 64-bit evaluation: powers like
# (lam-1)^(k-1) with lam in (2,3) stay below 2^511 and their squares below
# the float64 ceiling.  Larger k is rejected rather than adding a
# log-domain evaluation layer.
MAX_K = 512


@dataclass(frozen=True)
class CaseId:
    """Provenance tag for one catalog entry; serializes as the tag string."""

    tag: str

    def __post_init__(self):
        if self.tag not in ODD_TAGS and self.tag not in EVEN_TAGS:
            raise ValueError(f"unknown case tag: {self.tag!r}")

    @property
    def parity(self) -> str:
        return "odd" if self.tag in ODD_TAGS else "even"

    def __str__(self) -> str:
        return self.tag


@dataclass(frozen=True)
class CaseEquation:
    """One case of the catalog: either a literal eigenvalue or a scalar
    function with a bracket proven to contain exactly expected_roots roots."""

    id: CaseId
    k: int
    f: Optional[Callable[[float], float]]
    bracket: Optional[Tuple[float, float]]
    fixed_value: Optional[float]
    expected_roots: int

    @property
    def tag(self) -> str:
        return self.id.tag

    def solve(self, tol: float = rootfind.DEFAULT_TOL,
              grid: int = rootfind.DEFAULT_GRID) -> List[rootfind.Root]:
        """Isolate and bisect the case's roots (or return the fixed value)."""
        if self.fixed_value is not None:
            return [rootfind.Root(value=self.fixed_value, bracket_width=0.0,
                                  f_at_value=0.0, iterations=0)]
        lo, hi = self.bracket
        subs = rootfind.isolate(self.f, lo, hi, self.expected_roots,
                                grid=grid, label=f"{self.tag} (k={self.k})")
        roots = []
        for slo, shi in subs:
            if slo == shi:
                roots.append(rootfind.Root(value=slo, bracket_width=0.0,
                                           f_at_value=0.0, iterations=0))
            else:
                roots.append(rootfind.bisect(self.f, slo, shi, tol=tol))
        return roots


def eval_case(case: CaseEquation, lam: float) -> float:
    """Evaluate the case function at lam, exactly as written in the catalog."""
    if case.f is None:
        return lam - case.fixed_value
    return case.f(lam)


def _check_bracket(tag: str, k: int, f, lo: float, hi: float) -> None:
    # The proven root lies strictly inside; after the endpoint shrink the
    # function must change sign somewhere, if not at the shrunk endpoints
    # then across a coarse scan.
    a = lo + rootfind.ENDPOINT_SHRINK
    b = hi - rootfind.ENDPOINT_SHRINK
    fa, fb = f(a), f(b)
    if fa == 0.0 or fb == 0.0 or fa * fb < 0:
        return
    coarse = 64
    vals = [f(a + (b - a) * i / coarse) for i in range(coarse + 1)]
    for u, v in zip(vals, vals[1:]):
        if u == 0.0 or u * v < 0:
            return
    raise rootfind.BracketError(
        f"case {tag} (k={k}) shows no sign change on ({lo}, {hi})"
    )


def case_catalog(k: int) -> List[CaseEquation]:
    """The full case catalog for G_{k,3}: 8 entries for odd k, 14 for even.

    Fixed-value entries carry the literal eigenvalues 0, 1 and 2.  Each
    bracketed entry holds its case function and the open interval proven
    to contain exactly one root.

    Raises:
        ValueError: if k < 3 or k > 512.
    """
    if k < 3:
        raise ValueError(f"uniformity k must be >= 3, got {k}")
    if k > MAX_K:
        raise ValueError(f"uniformity k must be <= {MAX_K}, got {k}")

    def fixed(tag, value):
        return CaseEquation(id=CaseId(tag), k=k, f=None, bracket=None,
                            fixed_value=value, expected_roots=0)

    def bracketed(tag, f, lo, hi):
        _check_bracket(tag, k, f, lo, hi)
        return CaseEquation(id=CaseId(tag), k=k, f=f, bracket=(lo, hi),
                            fixed_value=None, expected_roots=1)

    if k % 2 == 1:
        def f_ii(lam):
            return (lam - 2.0) * (1.0 - lam) ** (k - 1) + 1.0

        def f_iii(lam):
            return (lam - 2.0) ** 2 * (1.0 - lam) ** (k - 2) - 1.0

        def f_iv(lam):
            return (lam - 2.0) ** 2 * (1.0 - lam) ** (k - 1) + 2.0 * lam - 3.0

        def f_v(lam):
            # (lam-1)^(k-1) = (1-lam)^(k-1) for even exponent k-1; the
            # (1-lam) form is used for both parities of the sign convention
            return ((lam - 2.0) * (1.0 - lam) ** (k - 1) + 1.0) ** 2 \
                - (1.0 - lam) ** k

        return [
            fixed("O-i-zero", 0.0),
            fixed("O-lambda1", 1.0),
            fixed("O-i-two", 2.0),
            bracketed("O-ii", f_ii, 0.0, 1.0),
            bracketed("O-iii", f_iii, 0.0, 1.0),
            bracketed("O-iv-low", f_iv, 0.0, 1.0),
            bracketed("O-iv-high", f_iv, 1.0, 2.0 * k / (k + 1.0)),
            bracketed("O-v", f_v, 0.0, 1.0),
        ]

    def g_ii(lam):
        return (lam - 2.0) * (lam - 1.0) ** (k - 1) - 1.0

    def g_iii(lam):
        return (lam - 2.0) ** 2 * (lam - 1.0) ** (k - 2) - 1.0

    def g_iv(lam):
        return (lam - 2.0) ** 2 * (lam - 1.0) ** (k - 1) - 2.0 * lam + 3.0

    def g_v(lam):
        return (lam - 2.0) ** 2 * (1.0 - lam) ** (k - 1) + 1.0

    def g_vi(lam):
        return ((lam - 2.0) * (lam - 1.0) ** (k - 1) - 1.0) ** 2 \
            - (lam - 1.0) ** k

    def g_vii(lam):
        return ((lam - 2.0) * (lam - 1.0) ** (k - 1) + 1.0) ** 2 \
            - (1.0 - lam) ** k

    return [
        fixed("E-i-zero", 0.0),
        fixed("E-lambda1", 1.0),
        fixed("E-i-two", 2.0),
        bracketed("E-ii-low", g_ii, 0.0, 1.0),
        bracketed("E-ii-high", g_ii, 2.0, 3.0),
        bracketed("E-iii-low", g_iii, 0.0, 1.0),
        bracketed("E-iii-high", g_iii, 2.0, 3.0),
        bracketed("E-iv-low", g_iv, 0.0, 1.0),
        bracketed("E-iv-mid", g_iv, 1.0, 2.0 * k / (1.0 + k)),
        bracketed("E-iv-high", g_iv, 2.0, 3.0),
        bracketed("E-v", g_v, 2.0, 3.0),
        bracketed("E-vi-low", g_vi, 0.0, 1.0),
        bracketed("E-vi-high", g_vi, 2.0, 3.0),
        bracketed("E-vii", g_vii, 2.0, 3.0),
    ]


def find_case(k: int, tag: str) -> CaseEquation:
    """Look up a single catalog entry by tag."""
    for case in case_catalog(k):
        if case.tag == tag:
            return case
    parity = "odd" if k % 2 == 1 else "even"
    raise ValueError(f"case {tag!r} does not exist for {parity} k={k}")
