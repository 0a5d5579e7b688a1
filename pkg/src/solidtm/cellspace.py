"""Finite Khalimsky-plane model of a locally compact surface.

A cell is a pair ``(x, y)`` of Khalimsky coordinates.  Its dimension is the
number of odd coordinates: vertices have both even, edges one odd, pixels
both odd.  The topology is the Alexandrov topology of the face order, so the
closure of a set adds faces and the smallest open superset adds cofaces.

A :class:`SpaceModel` is a window of ``W x H`` pixels with some open holes
removed and a closed *infinity locus* ``I`` that plays the role of the point
at infinity of the one-point compactification.  The modeled space is
``X = window - holes - I``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

Cell = tuple[int, int]
CellSet = frozenset  # frozenset[Cell]


class ModelError(ValueError):
    """A model description violates one of the SpaceModel invariants."""

    code = "ModelError"

    def __str__(self):
        return f"{self.code}: {super().__str__()}"


class EmptyInfinityLocus(ModelError):
    code = "EmptyInfinityLocus"


class InfinityLocusNotClosed(ModelError):
    code = "InfinityLocusNotClosed"


class HolesNotOpen(ModelError):
    code = "HolesNotOpen"


class DisconnectedSpace(ModelError):
    code = "DisconnectedSpace"


def dimension(c: Cell) -> int:
    return (c[0] & 1) + (c[1] & 1)


def _span(v: int) -> tuple[int, ...]:
    return (v - 1, v, v + 1) if v & 1 else (v,)


def _cospan(v: int) -> tuple[int, ...]:
    return (v,) if v & 1 else (v - 1, v, v + 1)


@lru_cache(maxsize=None)
def raw_faces(c: Cell) -> tuple[Cell, ...]:
    """Proper faces of ``c`` in the unbounded Khalimsky plane."""
    x, y = c
    return tuple((a, b) for a in _span(x) for b in _span(y) if (a, b) != c)


@lru_cache(maxsize=None)
def raw_cofaces(c: Cell) -> tuple[Cell, ...]:
    x, y = c
    return tuple((a, b) for a in _cospan(x) for b in _cospan(y) if (a, b) != c)


@lru_cache(maxsize=None)
def raw_neighbors(c: Cell) -> tuple[Cell, ...]:
    return raw_faces(c) + raw_cofaces(c)


def is_face(a: Cell, b: Cell) -> bool:
    """True iff ``a`` is a face of ``b`` (``a == b`` included)."""
    for u, v in zip(a, b):
        if u != v and not (v & 1 and abs(u - v) == 1):
            return False
    return True


def sort_key(c: Cell) -> tuple[int, int]:
    return (c[1], c[0])


def canonical(cells: Iterable[Cell]) -> list[Cell]:
    """Cells in canonical ``(y, x)`` order."""
    return sorted(cells, key=sort_key)


def pixel(x: int, y: int) -> Cell:
    if not (x & 1 and y & 1):
        raise ValueError(f"({x}, {y}) is not a pixel")
    return (x, y)


def rect_cells(x0: int, y0: int, x1: int, y1: int) -> frozenset:
    """All cells with ``x0 <= x <= x1`` and ``y0 <= y <= y1``."""
    return frozenset((x, y) for x in range(x0, x1 + 1) for y in range(y0, y1 + 1))


@dataclass(frozen=True)
class SpaceModel:
    width: int
    height: int
    removed: frozenset = field(default_factory=frozenset)
    infinity: frozenset = field(default_factory=frozenset)
    name: str = ""

    @property
    def window(self) -> frozenset:
        return rect_cells(0, 0, 2 * self.width, 2 * self.height)

    @property
    def complex(self) -> frozenset:
        """Non-removed cells: ``X`` together with the infinity locus."""
        return self._cached("complex", lambda: self.window - self.removed)

    @property
    def X(self) -> frozenset:
        return self._cached("X", lambda: self.complex - self.infinity)

    @property
    def vertices(self) -> frozenset:
        return self._cached("vertices", lambda: frozenset(c for c in self.X if dimension(c) == 0))

    @property
    def pixels(self) -> frozenset:
        return self._cached("pixels", lambda: frozenset(c for c in self.X if dimension(c) == 2))

    def _cached(self, key, make):
        cache = self.__dict__.setdefault("_cache", {})
        if key not in cache:
            cache[key] = make()
        return cache[key]

    def __hash__(self):
        return hash((self.width, self.height, self.removed, self.infinity))

    def __eq__(self, other):
        if not isinstance(other, SpaceModel):
            return NotImplemented
        return (self.width, self.height, self.removed, self.infinity) == (
            other.width, other.height, other.removed, other.infinity)

    def in_window(self, c: Cell) -> bool:
        return 0 <= c[0] <= 2 * self.width and 0 <= c[1] <= 2 * self.height

    def faces(self, c: Cell) -> list[Cell]:
        """Proper faces of ``c`` inside the non-removed complex (may hit ``I``)."""
        cx = self.complex
        return [f for f in raw_faces(c) if f in cx]

    def cofaces(self, c: Cell) -> list[Cell]:
        """Proper cofaces of ``c`` inside ``X``."""
        X = self.X
        return [f for f in raw_cofaces(c) if f in X]

    def neighbors(self, c: Cell) -> list[Cell]:
        """Comparable cells (faces and cofaces) in the non-removed complex."""
        cx = self.complex
        return [f for f in raw_neighbors(c) if f in cx]


def build_model(width: int, height: int, removed: Iterable[Cell] = (),
                infinity: Iterable[Cell] = (), name: str = "") -> SpaceModel:
    """Validate a model description and return the model.

    ``removed`` must be open in the full window (closed under cofaces) and
    ``infinity`` must be nonempty and closed in what remains.
    """
    if width < 2 or height < 2:
        raise ModelError(f"window must be at least 2x2 pixels, got {width}x{height}")
    model = SpaceModel(width, height, frozenset(removed), frozenset(infinity), name)
    window = model.window
    for c in model.removed | model.infinity:
        if c not in window:
            raise ModelError(f"cell {c} lies outside the {width}x{height} window")
    for c in model.removed:
        for f in raw_cofaces(c):
            if f in window and f not in model.removed:
                raise HolesNotOpen(f"removed cell {c} has coface {f} that is not removed")
    if not model.infinity:
        raise EmptyInfinityLocus("the infinity locus must be nonempty")
    if model.infinity & model.removed:
        raise ModelError("infinity locus and holes overlap")
    for c in model.infinity:
        for f in model.faces(c):
            if f not in model.infinity:
                raise InfinityLocusNotClosed(f"face {f} of infinity cell {c} is not in the locus")
    if not model.X:
        raise DisconnectedSpace("X is empty")
    if len(components(model, model.X)) != 1:
        raise DisconnectedSpace("X is not connected")
    if len(components(model, model.complex)) != 1:
        raise DisconnectedSpace("X together with the infinity locus is not connected")
    return model


def closure(model: SpaceModel, S: Iterable[Cell]) -> frozenset:
    """Add every face of every member (faces in ``I`` included)."""
    out = set(S)
    cx = model.complex
    for c in list(out):
        for f in raw_faces(c):
            if f in cx:
                out.add(f)
    return frozenset(out)


def star(model: SpaceModel, S: Iterable[Cell]) -> frozenset:
    """Add every coface inside ``X``: the smallest open superset."""
    out = set(S)
    X = model.X
    for c in list(out):
        for f in raw_cofaces(c):
            if f in X:
                out.add(f)
    return frozenset(out)


def interior(model: SpaceModel, S: Iterable[Cell]) -> frozenset:
    S = frozenset(S)
    X = model.X
    return frozenset(c for c in S if c in X and all(f in S for f in raw_cofaces(c) if f in X))


def components(model: SpaceModel, S: Iterable[Cell]) -> list[frozenset]:
    """Connected components under face/coface incidence, canonically ordered."""
    return list(_components(frozenset(S)))


@lru_cache(maxsize=65536)
def _components(S: frozenset) -> tuple[frozenset, ...]:
    # incidence does not depend on the model once S is fixed
    seen = set()
    parts = []
    for start in canonical(S):
        if start in seen:
            continue
        seen.add(start)
        part = [start]
        queue = deque([start])
        while queue:
            c = queue.popleft()
            for n in raw_neighbors(c):
                if n in S and n not in seen:
                    seen.add(n)
                    part.append(n)
                    queue.append(n)
        parts.append(frozenset(part))
    return tuple(parts)


def is_connected(model: SpaceModel, S: Iterable[Cell]) -> bool:
    return len(components(model, S)) == 1


def is_open(model: SpaceModel, S: Iterable[Cell]) -> bool:
    S = frozenset(S)
    return interior(model, S) == S


def is_closed(model: SpaceModel, S: Iterable[Cell]) -> bool:
    S = frozenset(S)
    return closure(model, S) & model.X == S
