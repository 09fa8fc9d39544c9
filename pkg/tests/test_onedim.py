import random

import pytest

from redlab.bound import capacity, index_set_size
from redlab.errors import Duplicate, NotEnoughMaximals, NotIrreducible
from redlab.onedim import (
    build_model,
    construct_elements,
    family_Iiu,
    index_set,
    survives,
    verify_converse,
    verify_counterexample,
)
from redlab.polyfield import PolyRing, monic_irreducibles, poly_divmod
from redlab.redsearch import gaussian_binomial


def first(p, t):
    uni = PolyRing(p, ("y",))
    return [f for _, f in zip(range(t), monic_irreducibles(uni))]


def test_index_set_order_and_size():
    assert index_set(2, 1) == [(1, (0,)), (2, (0,)), (2, (1,))]
    for p in (2, 3):
        for n in (1, 2, 3):
            assert len(index_set(p, n)) == index_set_size(p, n)


def test_model_validation():
    with pytest.raises(NotIrreducible) as info:
        build_model(2, ["y", "y^2+1"])
    assert info.value.index == 1
    with pytest.raises(Duplicate):
        build_model(2, ["y", "y+1", "y"])
    with pytest.raises(NotEnoughMaximals):
        construct_elements(build_model(2, ["y", "y+1"]), 1)


@pytest.mark.parametrize("p, n, t", [(2, 1, 3), (2, 2, 7), (3, 1, 4), (2, 1, 5), (3, 2, 13)])
def test_construction_survives(p, n, t):
    model = build_model(p, first(p, t))
    x = construct_elements(model, n)
    assert survives(model, x.x) is None
    rep = verify_counterexample(model, x, n)
    assert len(rep.covers) == sum(gaussian_binomial(n + 1, k, p) for k in range(1, n + 1))
    for a in x.assignment:
        for j, xj in enumerate(x.x, start=1):
            want = 0 if a.i < j else 1 if a.i == j else a.u[j - 1]
            assert poly_divmod(xj - want, a.maximal)[1].is_zero()


def test_family_members_survive_in_construction():
    model = build_model(2, first(2, 7))
    x = construct_elements(model, 2)
    for (i, u), gens in family_Iiu(model, x, 2):
        assert survives(model, gens) is not None


def _random_units(model, n, rng):
    ring = model.ring
    while True:
        xs = []
        for _ in range(n + 1):
            f = ring.zero()
            for k in range(5):
                c = rng.randrange(model.p)
                if c:
                    f = f + ring.monomial((k,), c)
            xs.append(f)
        if survives(model, xs) is None:
            return xs


@pytest.mark.parametrize("p, n, t", [(2, 1, 2), (2, 2, 6), (3, 1, 3)])
def test_converse_on_random_inputs(p, n, t):
    assert t <= capacity(p, n)
    model = build_model(p, first(p, t))
    rng = random.Random(t)
    for _ in range(50):
        rep = verify_converse(model, _random_units(model, n, rng), n)
        assert rep.non_surviving
        seen = [m for ms in rep.containing.values() for m in ms]
        assert len(seen) == len(set(seen))


def test_converse_preconditions():
    model = build_model(2, first(2, 3))
    with pytest.raises(ValueError):
        verify_converse(model, [model.ring("1"), model.ring("y")], 1)
    small = build_model(2, first(2, 2))
    with pytest.raises(ValueError):
        verify_converse(small, [small.ring("y"), small.ring("y^2")], 1)


def test_converse_on_degenerate_pair():
    model = build_model(2, first(2, 2))
    rep = verify_converse(model, [model.ring("0"), model.ring("1")], 1)
    assert rep.non_surviving == [(1, (0,)), (2, (1,))]
    assert rep.containing[(2, (0,))] == list(model.maximals)
