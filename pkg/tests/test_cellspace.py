import pytest
from hypothesis import given, strategies as st

from conftest import ALL, PLANE, subsets
from solidtm import models as M
from solidtm.cellspace import (
    DisconnectedSpace, EmptyInfinityLocus, HolesNotOpen, InfinityLocusNotClosed,
    ModelError, build_model, closure, components, dimension, interior, is_closed,
    is_connected, is_face, is_open, rect_cells, star,
)


def test_dimension_is_parity_count():
    assert [dimension(c) for c in [(2, 2), (1, 2), (2, 1), (3, 5)]] == [0, 1, 1, 2]


def test_plane_model_valid():
    m = build_model(6, 6, infinity=M.frame(6, 6))
    assert len(m.window) == 13 * 13
    assert len(m.X) == 11 * 11
    assert all(0 < x < 12 and 0 < y < 12 for x, y in m.X)


def test_empty_infinity_rejected():
    with pytest.raises(EmptyInfinityLocus):
        build_model(6, 6)


def test_punctured_square_4x4():
    m = build_model(4, 4, infinity={(4, 4)})
    assert (4, 4) not in m.X and len(m.X) == 81 - 1


def test_model_errors():
    with pytest.raises(InfinityLocusNotClosed):
        build_model(4, 4, infinity={(3, 4)})  # an edge without its endpoints
    with pytest.raises(HolesNotOpen):
        build_model(4, 4, removed={(4, 4)}, infinity={(0, 0)})
    with pytest.raises(DisconnectedSpace):
        # a full column of infinity splits X
        build_model(4, 4, infinity={(4, y) for y in range(9)})
    with pytest.raises(ModelError):
        build_model(1, 4, infinity={(0, 0)})
    with pytest.raises(ModelError):
        build_model(4, 4, infinity={(20, 0)})


def test_error_codes_in_message():
    with pytest.raises(EmptyInfinityLocus, match="^EmptyInfinityLocus: "):
        build_model(3, 3)


def test_closure_examples():
    assert closure(PLANE, {(3, 3)}) == rect_cells(2, 2, 4, 4)
    assert closure(PLANE, set()) == frozenset()
    assert closure(PLANE, {(1, 2)}) == {(1, 2), (0, 2), (2, 2)}


def test_interior_examples():
    assert interior(PLANE, rect_cells(2, 2, 4, 4)) == {(3, 3)}
    U = star(PLANE, {(6, 6)})
    assert interior(PLANE, U) == U
    assert interior(PLANE, {(2, 2)}) == frozenset()


def test_component_examples():
    assert components(PLANE, {(1, 1), (5, 1)}) == [frozenset({(1, 1)}), frozenset({(5, 1)})]
    assert components(PLANE, {(1, 1), (2, 1), (3, 1)}) == [frozenset({(1, 1), (2, 1), (3, 1)})]
    assert components(PLANE, set()) == []


def test_components_canonical_order():
    parts = components(PLANE, {(9, 1), (1, 3), (5, 1)})
    assert [min(p) for p in parts] == [(5, 1), (9, 1), (1, 3)]


def test_open_closed_examples():
    assert is_open(PLANE, {(3, 3)})
    assert is_closed(PLANE, rect_cells(2, 2, 4, 4))
    assert is_closed(PLANE, {(2, 2)}) and not is_open(PLANE, {(2, 2)})


def test_is_face():
    assert is_face((2, 2), (3, 3)) and is_face((3, 3), (3, 3))
    assert not is_face((3, 3), (2, 2)) and not is_face((2, 2), (5, 5))


@pytest.mark.parametrize("m", ALL, ids=lambda m: m.name)
def test_X_connected_and_clopen(m):
    assert is_connected(m, m.X) and is_open(m, m.X) and is_closed(m, m.X)


@pytest.mark.parametrize("m", ALL, ids=lambda m: m.name)
@given(data=st.data())
def test_closure_interior_laws(m, data):
    S = data.draw(subsets(m))
    T = S | data.draw(subsets(m))
    X = m.X
    cl, it = closure(m, S) & X, interior(m, S)
    assert it <= S <= cl
    assert closure(m, cl) & X == cl and interior(m, it) == it
    assert cl <= closure(m, T) and it <= interior(m, T)
    assert it == X - (closure(m, X - S) & X)
    assert is_open(m, it) and is_closed(m, cl)


@pytest.mark.parametrize("m", ALL, ids=lambda m: m.name)
@given(data=st.data())
def test_alexandrov_lattice(m, data):
    fam = [data.draw(subsets(m, 10)) for _ in range(3)]
    opens = [star(m, S) for S in fam]
    closeds = [closure(m, S) & m.X for S in fam]
    assert is_open(m, opens[0] & opens[1] & opens[2])
    assert is_closed(m, closeds[0] | closeds[1] | closeds[2])


@given(S=subsets(PLANE))
def test_components_partition(S):
    parts = components(PLANE, S)
    assert frozenset().union(*parts) == S and sum(map(len, parts)) == len(S)
    assert all(is_connected(PLANE, p) for p in parts)
    for i in range(len(parts)):
        for j in range(i):
            assert not is_connected(PLANE, parts[i] | parts[j])
