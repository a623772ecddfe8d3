import math

import numpy as np
import pytest

from loosepath import BracketError, RootCountError, bisect, find_case, isolate

# Frozen from numpy.roots on the expanded case polynomials; independent of
# the catalog's factored evaluation path.
OII_K3_ROOT = 0.24512233375330725      # lam^3 - 4 lam^2 + 5 lam - 1
EII_K4_HIGH_ROOT = 2.380277569097613   # lam^4 - 5 lam^3 + 9 lam^2 - 7 lam + 1


def test_linear_function():
    root = bisect(lambda t: t - 0.5, 0.0, 1.0, tol=1e-12)
    assert abs(root.value - 0.5) <= 1e-12
    assert root.bracket_width <= 1e-12


def test_expanded_cubic_matches_catalog_form():
    cubic = lambda t: np.polyval([1.0, -4.0, 5.0, -1.0], t)
    root = bisect(cubic, 0.0, 1.0, tol=1e-12)
    assert abs(root.value - OII_K3_ROOT) < 1e-11
    case_root = find_case(3, "O-ii").solve(tol=1e-12)[0]
    assert abs(case_root.value - root.value) < 1e-11


def test_expanded_quartic_even_case():
    quartic = lambda t: np.polyval([1.0, -5.0, 9.0, -7.0, 1.0], t)
    root = bisect(quartic, 2.0, 3.0, tol=1e-12)
    assert abs(root.value - EII_K4_HIGH_ROOT) < 1e-11
    assert 2.35 < root.value < 2.4


@pytest.mark.parametrize("lo,hi", [(0.0, 1.0), (2.0, 3.0), (0.3, 0.9)])
def test_iteration_and_width_contract(lo, hi):
    f = lambda t: (t - (lo + 0.37 * (hi - lo))) ** 3
    tol = 1e-12
    root = bisect(f, lo, hi, tol=tol)
    assert root.bracket_width <= tol
    assert root.iterations <= math.ceil(math.log2((hi - lo) / tol)) + 1


def test_exact_hit_terminates_immediately():
    root = bisect(lambda t: t - 0.5, 0.25, 0.75)
    assert root.value == 0.5
    assert root.f_at_value == 0.0
    assert root.bracket_width == 0.0


def test_value_minimizes_f_over_final_endpoints():
    f = lambda t: math.expm1(t) - 1.2
    root = bisect(f, 0.0, 2.0)
    assert root.f_at_value == f(root.value)
    # the other final endpoint sits one bracket width to either side
    neighbors = (f(root.value - root.bracket_width),
                 f(root.value + root.bracket_width))
    assert abs(root.f_at_value) <= max(abs(v) for v in neighbors)


def test_bisect_rejects_bad_input():
    with pytest.raises(BracketError):
        bisect(lambda t: t * t + 1, 0.0, 1.0)
    with pytest.raises(ValueError):
        bisect(lambda t: t, 0.0, 1.0, tol=0.0)
    with pytest.raises(ValueError):
        bisect(lambda t: t, 1.0, 0.0)


def test_isolate_single_root():
    subs = isolate(lambda t: t - 0.5, 0.0, 1.0, expected=1, grid=64)
    assert len(subs) == 1
    lo, hi = subs[0]
    assert lo <= 0.5 <= hi


def test_isolate_oiv_k3():
    case = find_case(3, "O-iv-low")
    subs = isolate(case.f, 0.0, 1.0, expected=1, grid=1024)
    lo, hi = subs[0]
    assert lo < 0.117 < hi
    assert case.f(0.1) > 0 and case.f(0.12) < 0


def test_isolate_two_roots():
    f = lambda t: (t - 0.3) * (t - 0.7)
    subs = isolate(f, 0.0, 1.0, expected=2, grid=64)
    assert len(subs) == 2
    assert subs[0][0] < 0.3 < subs[0][1]
    assert subs[1][0] < 0.7 < subs[1][1]


def test_isolate_count_mismatch_names_label():
    f = lambda t: t - 0.5
    with pytest.raises(RootCountError, match="O-ii"):
        isolate(f, 0.0, 1.0, expected=2, grid=64, label="O-ii (k=3)")


def test_isolate_rejects_small_grid():
    with pytest.raises(ValueError):
        isolate(lambda t: t, 0.0, 1.0, expected=1, grid=32)


def test_width_halves_monotonically():
    widths = []

    def f(t):
        return t - math.pi / 6

    lo, hi = 0.0, 1.0
    flo = f(lo)
    while hi - lo > 1e-10:
        widths.append(hi - lo)
        mid = 0.5 * (lo + hi)
        if flo * f(mid) < 0:
            hi = mid
        else:
            lo, flo = mid, f(mid)
    ratios = [b / a for a, b in zip(widths, widths[1:])]
    assert all(abs(r - 0.5) < 1e-12 for r in ratios)
