import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from redlab.bound import (
    admits_principal,
    capacity,
    index_set_size,
    min_generators,
    min_generators_closed_form,
)


def test_small_values():
    assert capacity(2, 1) == 2
    assert capacity(2, 2) == 6
    assert capacity(3, 2) == 12
    assert [min_generators(2, M) for M in (1, 2, 3, 4, 6, 7)] == [1, 1, 2, 2, 2, 3]
    assert index_set_size(2, 2) == 7


@pytest.mark.parametrize("q", range(2, 12))
def test_principal_threshold(q):
    for M in range(1, 11):
        assert admits_principal(q, M) == (M <= q) == (min_generators(q, M) == 1)


@pytest.mark.parametrize("q", range(2, 17))
def test_boundary_is_tight(q):
    for n in range(1, 9):
        assert min_generators(q, capacity(q, n)) == n
        assert min_generators(q, capacity(q, n) + 1) == n + 1
        assert index_set_size(q, n) == capacity(q, n) + 1


@given(st.integers(2, 50), st.integers(1, 10 ** 6))
def test_search_matches_closed_form(q, M):
    assert min_generators(q, M) == min_generators_closed_form(q, M)


def test_closed_form_agrees_with_floats_where_safe():
    for q in (2, 3, 5):
        for M in range(1, 200):
            approx = math.ceil(math.log(q + (q - 1) * M, q) - 1e-12) - 1
            assert min_generators(q, M) == max(approx, 1)


def test_rejects_bad_arguments():
    with pytest.raises(ValueError):
        capacity(1, 2)
    with pytest.raises(ValueError):
        min_generators(2, 0)
    with pytest.raises(ValueError):
        capacity(2, 0)
