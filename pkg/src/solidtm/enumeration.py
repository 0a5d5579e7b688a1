"""Exhaustive enumeration of compact, open and closed subsets of tiny models."""

from __future__ import annotations

from typing import Iterable, Iterator

from .cellspace import SpaceModel, dimension, raw_cofaces, raw_faces


def _downsets(order, needs) -> Iterator[frozenset]:
    # cells in `order` are decided one by one; a cell may join only when
    # every cell in needs(cell) has already joined
    chosen = set()

    def rec(i):
        if i == len(order):
            yield frozenset(chosen)
            return
        c = order[i]
        yield from rec(i + 1)
        if all(n in chosen for n in needs(c)):
            chosen.add(c)
            yield from rec(i + 1)
            chosen.discard(c)

    yield from rec(0)


def compact_subsets(model: SpaceModel, U: Iterable) -> Iterator[frozenset]:
    """Every face-closed subset of ``U`` whose faces all lie in ``U`` (so compact)."""
    U = frozenset(U)
    order = sorted(U, key=lambda c: (dimension(c), c[1], c[0]))
    # faces in I or outside U never join, which blocks their cofaces
    return _downsets(order, lambda c: [f for f in raw_faces(c) if f in model.complex])


def open_sets(model: SpaceModel) -> Iterator[frozenset]:
    """Every open subset of ``X``."""
    X = model.X
    order = sorted(X, key=lambda c: (-dimension(c), c[1], c[0]))
    return _downsets(order, lambda c: [f for f in raw_cofaces(c) if f in X])


def closed_sets(model: SpaceModel) -> Iterator[frozenset]:
    X = model.X
    for U in open_sets(model):
        yield X - U


def count(it) -> int:
    return sum(1 for _ in it)

