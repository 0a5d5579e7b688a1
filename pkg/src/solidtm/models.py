"""Shipped space models and the region constructors used by scenarios."""

from __future__ import annotations

from .cellspace import SpaceModel, build_model, closure, interior, rect_cells


def frame(width: int, height: int, sides: str = "lrbt") -> frozenset:
    """Window border cells on the given sides (l, r, b, t)."""
    W, H = 2 * width, 2 * height
    out = set()
    for x in range(W + 1):
        for y in range(H + 1):
            if ("l" in sides and x == 0) or ("r" in sides and x == W) or \
               ("b" in sides and y == 0) or ("t" in sides and y == H):
                out.add((x, y))
    return frozenset(out)


def plane(n: int = 6) -> SpaceModel:
    """Square window with the whole border glued to infinity: a model of R^2."""
    return build_model(n, n, infinity=frame(n, n), name=f"plane-{n}")


def half_plane(n: int = 6) -> SpaceModel:
    """Bottom border stays in X as the boundary line of a closed half-plane."""
    return build_model(n, n, infinity=frame(n, n, "lrt"), name=f"half-plane-{n}")


def punctured_square(n: int = 6) -> SpaceModel:
    """Closed square with its center vertex glued to infinity (a punctured disk)."""
    if n % 2:
        raise ValueError("punctured square needs an even side so the center is a vertex")
    return build_model(n, n, infinity={(n, n)}, name=f"punctured-square-{n}")


def strip_with_hole(width: int = 10, height: int = 3) -> SpaceModel:
    """Strip R x [0, 1] (ends glued to infinity) with an open pixel removed near the left."""
    return build_model(width, height, removed={(3, height if height % 2 else height - 1)},
                       infinity=frame(width, height, "lr"), name=f"strip-with-hole-{width}x{height}")


def tiny_models() -> list[SpaceModel]:
    """2x2-pixel models with at most 18 cells in X, for exhaustive checks."""
    return [
        build_model(2, 2, infinity=frame(2, 2), name="tiny-plane"),
        build_model(2, 2, infinity=frame(2, 2, "lrt"), name="tiny-half-plane"),
        build_model(2, 2, infinity=frame(2, 2, "lr"), name="tiny-strip"),
        build_model(2, 2, infinity=frame(2, 2, "lt"), name="tiny-quadrant"),
    ]


def shipped_models() -> dict[str, SpaceModel]:
    return {m.name: m for m in (plane(), half_plane(), punctured_square(), strip_with_hole())}


# region constructors -------------------------------------------------------

def pixel_block(x0: int, y0: int, x1: int, y1: int) -> frozenset:
    """Pixels with odd coordinates in ``[x0, x1] x [y0, y1]``."""
    return frozenset((x, y) for x in range(x0 | 1, x1 + 1, 2) for y in range(y0 | 1, y1 + 1, 2))


def closed_block(model: SpaceModel, x0: int, y0: int, x1: int, y1: int) -> frozenset:
    return closure(model, pixel_block(x0, y0, x1, y1)) & model.X


def open_block(model: SpaceModel, x0: int, y0: int, x1: int, y1: int) -> frozenset:
    return interior(model, closed_block(model, x0, y0, x1, y1))


def row(model: SpaceModel, y: int) -> frozenset:
    return frozenset(c for c in model.X if c[1] == y)


def column(model: SpaceModel, x: int) -> frozenset:
    return frozenset(c for c in model.X if c[0] == x)


def half(model: SpaceModel, axis: str, op: str, value: int) -> frozenset:
    """Cells with coordinate ``axis`` compared to ``value`` (ops: lt, le, gt, ge, eq)."""
    i = {"x": 0, "y": 1}[axis]
    cmp = {"lt": int.__lt__, "le": int.__le__, "gt": int.__gt__,
           "ge": int.__ge__, "eq": int.__eq__}[op]
    return frozenset(c for c in model.X if cmp(c[i], value))


def ring(model: SpaceModel, x0: int, y0: int, x1: int, y1: int) -> frozenset:
    """Border cells of the cell rectangle ``[x0, x1] x [y0, y1]`` (even corners)."""
    return frozenset(c for c in rect_cells(x0, y0, x1, y1)
                     if c[0] in (x0, x1) or c[1] in (y0, y1)) & model.X
