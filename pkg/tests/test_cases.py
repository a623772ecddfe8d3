import math

import pytest

from loosepath import CaseId, case_catalog, eval_case, find_case
from loosepath.rootfind import ENDPOINT_SHRINK


def by_tag(k):
    return {c.tag: c for c in case_catalog(k)}


def test_catalog_cardinality():
    assert len(case_catalog(3)) == 8
    assert len(case_catalog(4)) == 14
    assert len(case_catalog(51)) == 8
    assert len(case_catalog(50)) == 14


def test_rejects_out_of_range_k():
    with pytest.raises(ValueError):
        case_catalog(2)
    with pytest.raises(ValueError):
        case_catalog(513)


def test_fixed_values_carry_literals():
    cases = by_tag(3)
    assert cases["O-i-zero"].fixed_value == 0.0
    assert cases["O-lambda1"].fixed_value == 1.0
    assert cases["O-i-two"].fixed_value == 2.0
    assert cases["O-i-zero"].expected_roots == 0
    assert cases["O-ii"].expected_roots == 1
    assert cases["O-ii"].fixed_value is None


def test_tags_serialize_as_literal_strings():
    assert str(CaseId("O-iv-high")) == "O-iv-high"
    assert CaseId("E-vii").parity == "even"
    assert CaseId("O-v").parity == "odd"
    with pytest.raises(ValueError):
        CaseId("O-nonsense")


def test_eval_examples():
    cases = by_tag(3)
    assert eval_case(cases["O-ii"], 0.0) == -1.0
    assert eval_case(cases["O-ii"], 1.0) == 1.0
    # O-iv written as f(lam) - g(lam) with f = (lam-2)^2 (1-lam)^(k-1) - 3
    # and g = -2 lam: the proven endpoint gaps are +1 and -1
    assert eval_case(cases["O-iv-low"], 0.0) == 1.0
    assert eval_case(cases["O-iv-low"], 1.0) == -1.0
    even = by_tag(4)
    assert eval_case(even["E-ii-high"], 3.0) == 2.0 ** 3 - 1.0


def test_odd_v_uses_even_power_identity():
    # (lam-1)^(k-1) equals (1-lam)^(k-1) for odd k, so the catalog's O-v
    # function must agree with the (lam-1) form it abbreviates
    case = by_tag(5)["O-v"]
    for lam in (0.1, 0.37, 0.82):
        direct = ((lam - 2) * (lam - 1) ** 4 + 1) ** 2 - (1 - lam) ** 5
        assert math.isclose(eval_case(case, lam), direct, rel_tol=1e-15)


@pytest.mark.parametrize("k", range(3, 52))
def test_sign_change_at_shrunk_endpoints(k):
    for case in case_catalog(k):
        if case.fixed_value is not None:
            continue
        lo, hi = case.bracket
        fa = case.f(lo + ENDPOINT_SHRINK)
        fb = case.f(hi - ENDPOINT_SHRINK)
        assert fa * fb < 0, f"{case.tag} k={k}: f={fa}, {fb}"


@pytest.mark.parametrize("k", [3, 4, 21, 50, 51, 512])
def test_case_functions_finite_across_bracket(k):
    for case in case_catalog(k):
        if case.fixed_value is not None:
            continue
        lo, hi = case.bracket
        for i in range(65):
            lam = (lo + ENDPOINT_SHRINK) + (hi - lo - 2 * ENDPOINT_SHRINK) * i / 64
            assert math.isfinite(case.f(lam)), f"{case.tag} k={k} lam={lam}"


def test_find_case_rejects_parity_mismatch():
    with pytest.raises(ValueError):
        find_case(4, "O-ii")
    with pytest.raises(ValueError):
        find_case(3, "E-vii")
    assert find_case(3, "O-ii").tag == "O-ii"
