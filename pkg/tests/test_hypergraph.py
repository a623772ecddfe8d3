import numpy as np
import pytest

from loosepath import build_loose_path, degrees


def test_k3_d3_layout():
    path = build_loose_path(3, 3)
    assert path.n == 7
    assert path.edges == ((1, 2, 3), (3, 4, 5), (5, 6, 7))


def test_k4_d3_layout():
    path = build_loose_path(4, 3)
    assert path.n == 10
    assert path.edges == ((1, 2, 3, 4), (4, 5, 6, 7), (7, 8, 9, 10))


def test_single_edge():
    path = build_loose_path(3, 1)
    assert path.n == 3
    assert path.edges == ((1, 2, 3),)


@pytest.mark.parametrize("k,d,expected", [
    (3, 3, (1, 1, 2, 1, 2, 1, 1)),
    (4, 3, (1, 1, 1, 2, 1, 1, 2, 1, 1, 1)),
    (3, 1, (1, 1, 1)),
])
def test_degree_examples(k, d, expected):
    assert tuple(degrees(build_loose_path(k, d))) == expected


@pytest.mark.parametrize("k", [3, 4, 5, 8])
@pytest.mark.parametrize("d", [1, 2, 3, 5])
def test_invariants(k, d):
    path = build_loose_path(k, d)
    assert path.n == d * (k - 1) + 1
    # consecutive edges share exactly one vertex, others none
    sets = [set(e) for e in path.edges]
    for i in range(d):
        assert len(sets[i]) == k
        for j in range(i + 1, d):
            assert len(sets[i] & sets[j]) == (1 if j == i + 1 else 0)
    assert set().union(*sets) == set(range(1, path.n + 1))
    deg = degrees(path)
    assert deg.sum() == d * k
    assert np.count_nonzero(deg == 2) == d - 1
    assert np.count_nonzero(deg == 1) == path.n - (d - 1)


def test_deterministic():
    assert build_loose_path(5, 4) == build_loose_path(5, 4)


@pytest.mark.parametrize("k,d", [(2, 3), (1, 1), (3, 0), (3, -1)])
def test_rejects_bad_parameters(k, d):
    with pytest.raises(ValueError):
        build_loose_path(k, d)
