"""Bracketed root isolation and bisection with guaranteed sign-change maintenance."""

from dataclasses import dataclass
from typing import Callable, List, Tuple

DEFAULT_TOL = 1e-12
DEFAULT_GRID = 4096

# Case functions may vanish exactly at a bracket endpoint; every root proved
# for them lies strictly inside the open interval, so scans pull the
# endpoints inward by this amount before sign testing.
ENDPOINT_SHRINK = 1e-9


class BracketError(ValueError):
    """The supplied interval does not bracket a sign change."""


class RootCountError(RuntimeError):
    """A scan found a different number of sign changes than expected."""


@dataclass(frozen=True)
class Root:
    value: float
    bracket_width: float
    f_at_value: float
    iterations: int


def bisect(f: Callable[[float], float], lo: float, hi: float,
           tol: float = DEFAULT_TOL) -> Root:
    """Bisect f on [lo, hi] down to an absolute bracket width of tol.

    Requires f(lo) and f(hi) to have strictly opposite signs.  The bracket
    width halves every iteration, so the iteration count is at most
    ceil(log2((hi-lo)/tol)) + 1.  An exact zero hit terminates immediately.
    Returns the final endpoint with the smaller |f|.

    Raises:
        ValueError: if tol <= 0 or lo >= hi.
        BracketError: if there is no sign change.
    """
    if tol <= 0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    if not lo < hi:
        raise ValueError(f"need lo < hi, got [{lo}, {hi}]")
    flo, fhi = f(lo), f(hi)
    if flo == 0.0:
        return Root(value=lo, bracket_width=0.0, f_at_value=0.0, iterations=0)
    if fhi == 0.0:
        return Root(value=hi, bracket_width=0.0, f_at_value=0.0, iterations=0)
    if flo * fhi > 0:
        raise BracketError(f"no sign change on [{lo}, {hi}]: f={flo}, {fhi}")
    iterations = 0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break  # interval no longer splittable in floating point
        fmid = f(mid)
        iterations += 1
        if fmid == 0.0:
            return Root(value=mid, bracket_width=0.0, f_at_value=0.0,
                        iterations=iterations)
        if flo * fmid < 0:
            hi, fhi = mid, fmid
        else:
            lo, flo = mid, fmid
    value, fval = (lo, flo) if abs(flo) <= abs(fhi) else (hi, fhi)
    return Root(value=value, bracket_width=hi - lo, f_at_value=fval,
                iterations=iterations)


def isolate(f: Callable[[float], float], lo: float, hi: float, expected: int,
            grid: int = DEFAULT_GRID, label: str = "") -> List[Tuple[float, float]]:
    """Scan (lo, hi) for sign changes and return the bracketing sub-intervals.

    The interval is shrunk inward by ENDPOINT_SHRINK and sampled at grid+1
    equally spaced points.  Each consecutive pair with strictly opposite
    signs yields one sub-bracket; an exact zero at a sample point yields a
    degenerate (x, x) bracket.  A count different from `expected` raises
    RootCountError: that is a detected inconsistency with the proven root
    layout, not a silent failure.

    Raises:
        ValueError: if grid < 64 or lo >= hi.
        RootCountError: if the number of sign changes differs from expected.
    """
    if grid < 64:
        raise ValueError(f"grid must be at least 64, got {grid}")
    if not lo < hi:
        raise ValueError(f"need lo < hi, got [{lo}, {hi}]")
    a = lo + ENDPOINT_SHRINK
    b = hi - ENDPOINT_SHRINK
    if not a < b:
        raise ValueError(f"interval [{lo}, {hi}] vanishes after endpoint shrink")
    step = (b - a) / grid
    xs = [a + i * step for i in range(grid)] + [b]
    fs = [f(x) for x in xs]
    found: List[Tuple[float, float]] = []
    for i in range(grid):
        if fs[i] == 0.0:
            found.append((xs[i], xs[i]))
        elif fs[i] * fs[i + 1] < 0:
            found.append((xs[i], xs[i + 1]))
    if fs[-1] == 0.0:
        found.append((xs[-1], xs[-1]))
    if len(found) != expected:
        where = f" in {label}" if label else ""
        raise RootCountError(
            f"expected {expected} sign change(s) on ({lo}, {hi}){where}, "
            f"found {len(found)} with grid={grid}"
        )
    return found
