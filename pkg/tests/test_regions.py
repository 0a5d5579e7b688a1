import random

import pytest
from hypothesis import assume, given, strategies as st

from conftest import ALL, GENUS0, PLANE, PUNCT, STRIP
from solidtm import models as M
from solidtm.cellspace import closure, components, is_open, rect_cells, star
from solidtm.enumeration import compact_subsets, open_sets
from solidtm.verify import deep_cells, random_blob
from solidtm.regions import (
    EmptyRegion, PreconditionViolated, classify, complement_split, in_family, is_bounded,
    is_compact, k0_components, max_compact_subset, min_open_superset, partition_problems,
    search_solid_partitions, solid_hull, solid_interpolate, verify_solid_partition,
)

RING = closure(PLANE, M.pixel_block(3, 3, 7, 7) - {(5, 5)})


def test_bounded_examples():
    assert is_bounded(PLANE, {(3, 3)})
    assert not is_bounded(PLANE, {(1, 1)})
    assert not is_bounded(PUNCT, M.row(PUNCT, 6))


def test_classify_pixel_closure_is_compact_solid():
    cls = classify(PLANE, closure(PLANE, {(5, 5)}))
    assert cls.compact and cls.connected and cls.solid
    assert cls.families()["K_s"] and cls.in_K0


def test_ring_is_not_solid():
    cls = classify(PLANE, RING)
    assert cls.compact and cls.connected and not cls.solid and cls.semi_solid
    bdd, unb = complement_split(PLANE, RING)
    assert bdd == [frozenset({(5, 5)})] and len(unb) == 1


def test_outer_ring_solid_in_punctured_square():
    B = M.ring(PUNCT, 0, 0, 12, 12)
    assert in_family(PUNCT, B, "K_s")


def test_complement_split_examples():
    bdd, unb = complement_split(PLANE, closure(PLANE, {(5, 5)}))
    assert bdd == [] and len(unb) == 1
    cols = M.column(STRIP, 6) | M.column(STRIP, 10)
    bdd, unb = complement_split(STRIP, cols)
    assert len(bdd) == 1 and len(unb) == 2
    assert min(x for x, _ in bdd[0]) == 7 and max(x for x, _ in bdd[0]) == 9


def test_solid_hull_examples():
    assert solid_hull(PLANE, RING) == rect_cells(2, 2, 8, 8)
    K = closure(PLANE, {(5, 5)})
    assert solid_hull(PLANE, K) == K
    open_ring = rect_cells(3, 3, 7, 7) - rect_cells(4, 4, 6, 6)
    assert is_open(PLANE, open_ring)
    assert solid_hull(PLANE, open_ring) == rect_cells(3, 3, 7, 7)
    with pytest.raises(PreconditionViolated):
        solid_hull(PLANE, {(1, 1), (9, 9)})


def test_max_compact_subset_examples():
    assert max_compact_subset(PLANE, PLANE.X) == rect_cells(2, 2, 10, 10)
    assert max_compact_subset(PLANE, {(3, 3)}) == frozenset()
    assert max_compact_subset(PLANE, rect_cells(3, 3, 7, 7)) == rect_cells(4, 4, 6, 6)
    with pytest.raises(PreconditionViolated):
        max_compact_subset(PLANE, {(2, 2)})


def test_min_open_superset_examples():
    st_v = min_open_superset(PLANE, {(2, 2)})
    assert len(st_v) == 9 and st_v == rect_cells(1, 1, 3, 3)
    U = rect_cells(3, 3, 7, 7)
    assert min_open_superset(PLANE, U) == U
    assert min_open_superset(PLANE, M.half(PLANE, "y", "le", 6)) == M.half(PLANE, "y", "le", 7)


def test_k0_components():
    K = closure(PLANE, {(3, 3)}) | closure(PLANE, {(9, 9)})
    assert len(k0_components(PLANE, K)) == 2
    assert len(k0_components(PLANE, closure(PLANE, {(5, 5)}))) == 1
    assert k0_components(PLANE, frozenset()) == []


def test_solid_interpolate():
    U = rect_cells(3, 3, 9, 9)
    K = max_compact_subset(PLANE, U)
    assert solid_interpolate(PLANE, K, U) == solid_hull(PLANE, K) == K
    P = closure(PLANE, {(5, 5)})
    C = solid_interpolate(PLANE, P, U)
    assert P <= C <= U and in_family(PLANE, C, "K_s")
    V = rect_cells(3, 3, 9, 9)
    K2 = closure(PLANE, {(5, 5), (7, 7)})
    C = solid_interpolate(PLANE, K2, V)
    assert K2 <= C <= V and in_family(PLANE, C, "K_s")


def test_degenerate_X():
    cls = classify(PLANE, PLANE.X)
    assert cls.open and cls.closed and cls.connected and not cls.bounded and not cls.solid
    with pytest.raises(EmptyRegion):
        classify(PLANE, frozenset())


def test_partition_examples():
    A = closure(PLANE, {(5, 5)})
    assert verify_solid_partition(PLANE, A, [A])
    block = M.closed_block(PLANE, 3, 3, 7, 7)
    left = closure(PLANE, M.pixel_block(3, 3, 3, 7))
    assert not verify_solid_partition(PLANE, block, [left, block - left])
    probs = partition_problems(PLANE, block, [left, block - left])
    assert "piece-1-not-bounded-solid" in probs
    assert "union-mismatch" in partition_problems(PLANE, block, [left])


def test_strip_partition():
    A = M.half(STRIP, "x", "ge", 6) & M.half(STRIP, "x", "le", 14)
    P1 = M.half(STRIP, "x", "ge", 6) & M.half(STRIP, "x", "le", 8)
    P2 = M.half(STRIP, "x", "gt", 8) & M.half(STRIP, "x", "lt", 12)
    P3 = M.half(STRIP, "x", "ge", 12) & M.half(STRIP, "x", "le", 14)
    assert in_family(STRIP, P1, "K_s") and in_family(STRIP, P2, "O*_s") and in_family(STRIP, P3, "K_s")
    assert verify_solid_partition(STRIP, A, [P1, P2, P3])


@pytest.mark.parametrize("m", GENUS0, ids=lambda m: m.name)
def test_no_partition_found_on_genus0(m):
    rng = random.Random(1)
    block = M.closed_block(m, 3, 3, 7, 7)
    assert search_solid_partitions(m, block, rng, 50) == []


def _region(m, data):
    rng = data.draw(st.randoms(use_true_random=False))
    blob = random_blob(m, rng, rng.randint(1, 25), deep_cells(m, 2))
    A = closure(m, blob) if rng.random() < 0.5 else star(m, blob)
    assert in_family(m, A, "A*_c")
    return A


@pytest.mark.parametrize("m", ALL, ids=lambda m: m.name)
@given(data=st.data())
def test_hull_laws(m, data):
    A = _region(m, data)
    H = solid_hull(m, A)
    assert A <= H and solid_hull(m, H) == H
    assert in_family(m, H, "A*_s")
    assert (H == A) == classify(m, A).solid
    for B in complement_split(m, A)[0]:
        assert in_family(m, B, "A*_s")


@pytest.mark.parametrize("m", ALL, ids=lambda m: m.name)
@given(data=st.data())
def test_hull_trichotomy(m, data):
    A, B = _region(m, data), _region(m, data)
    B = frozenset().union(*[p for p in components(m, B - A)[:1]])
    assume(B and in_family(m, B, "A*_c"))
    HA, HB = solid_hull(m, A), solid_hull(m, B)
    assert HA.isdisjoint(HB) or HA < HB or HB < HA


@pytest.mark.parametrize("m", ALL, ids=lambda m: m.name)
@given(data=st.data())
def test_hull_monotone(m, data):
    A = _region(m, data)
    assume(is_compact(m, A))
    B = closure(m, A | _region(m, data))
    assume(in_family(m, B, "K_c"))
    assert solid_hull(m, A) <= solid_hull(m, B)


def test_extremal_witnesses_against_enumeration():
    for m in M.tiny_models():
        opens = list(open_sets(m))
        for U in opens:
            if len(U) > 16:
                continue
            core = max_compact_subset(m, U)
            assert all(K <= core for K in compact_subsets(m, U))
        for F in [m.X - U for U in opens[::7]]:
            nb = min_open_superset(m, F)
            assert all(nb <= U for U in opens if F <= U)
