"""Scenario documents: a model, a solid-set function and named regions.

A scenario is plain JSON::

    {"model": {"widthPixels": 6, "heightPixels": 6, "holes": [],
               "infinity": "frame"},
     "ssf": {"kind": "pointLine", "params": {"point": [6, 8], "line": {"row": 6}}},
     "sets": {"F": {"half": ["y", "le", 6]}},
     "expect": [{"mu": "F", "equals": 0}]}

Region specs are one of ``{"cells": [[x, y], ...]}``, ``{"pixels": [[x0, y0,
x1, y1], ...], "wrap": "closure" | "interior"}``, ``{"row": y}``,
``{"column": x}``, ``{"ring": [x0, y0, x1, y1]}``, ``{"half": [axis, op, v]}``,
``"X"``, a set name, or a combinator ``{"union" | "minus" | "intersect":
[spec, ...]}``, ``{"star" | "closure" | "interior" | "hull" | "complement": spec}``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from . import models as M
from .cellspace import SpaceModel, build_model, closure, interior, rect_cells, star
from .regions import solid_hull
from .ssf import SolidSetFunction, make_builtin

SCHEMA_VERSION = 1


class ScenarioError(ValueError):
    """Malformed scenario; the message names the offending field."""


@dataclass
class Scenario:
    name: str
    model: SpaceModel
    ssf: SolidSetFunction
    sets: dict = field(default_factory=dict)
    expect: list = field(default_factory=list)
    doc: dict = field(default_factory=dict)


def load(path) -> Scenario:
    path = Path(path)
    try:
        doc = json.loads(path.read_text())
    except json.JSONDecodeError as e:
        raise ScenarioError(f"{path}: line {e.lineno}: {e.msg}") from None
    return parse(doc, name=doc.get("name", path.stem))


def parse(doc: dict, name: str = "") -> Scenario:
    if not isinstance(doc, dict):
        raise ScenarioError("scenario must be a JSON object")
    model = parse_model(_need(doc, "model"))
    sets: dict = {}
    for key, spec in (doc.get("sets") or {}).items():
        try:
            sets[key] = region(model, spec, sets)
        except ScenarioError as e:
            raise ScenarioError(f"sets.{key}: {e}") from None
    try:
        ssf = parse_ssf(model, _need(doc, "ssf"), sets)
    except (ScenarioError, ValueError, KeyError, TypeError) as e:
        raise ScenarioError(f"ssf: {e}") from None
    return Scenario(name or doc.get("name", ""), model, ssf, sets, list(doc.get("expect", [])), doc)


def _need(doc, key):
    if key not in doc:
        raise ScenarioError(f"missing field {key!r}")
    return doc[key]


def parse_model(spec: dict) -> SpaceModel:
    try:
        w, h = int(spec["widthPixels"]), int(spec["heightPixels"])
    except (KeyError, TypeError, ValueError):
        raise ScenarioError("model: widthPixels and heightPixels must be integers") from None
    removed = set()
    for i, hole in enumerate(spec.get("holes", [])):
        if isinstance(hole, dict) and "cells" in hole:
            removed |= {tuple(c) for c in hole["cells"]}
        elif isinstance(hole, list) and len(hole) == 4:
            x0, y0, x1, y1 = hole
            # strict interior of the cell rectangle: an open set
            removed |= rect_cells(x0 + 1, y0 + 1, x1 - 1, y1 - 1)
        else:
            raise ScenarioError(f"model.holes[{i}]: expected [x0, y0, x1, y1] or {{'cells': ...}}")
    inf = spec.get("infinity", "frame")
    named = {"frame": "lrbt", "frame-minus-bottom": "lrt", "ends": "lr"}
    if isinstance(inf, str):
        if inf not in named:
            raise ScenarioError(f"model.infinity: unknown name {inf!r}")
        infinity = M.frame(w, h, named[inf])
    elif isinstance(inf, dict) and "cells" in inf:
        infinity = {tuple(c) for c in inf["cells"]}
    elif isinstance(inf, dict) and "sides" in inf:
        infinity = M.frame(w, h, inf["sides"])
    else:
        raise ScenarioError("model.infinity: expected a name, {'cells': ...} or {'sides': ...}")
    try:
        return build_model(w, h, removed, infinity - removed if removed else infinity,
                           name=spec.get("name", ""))
    except ValueError as e:
        raise ScenarioError(f"model: {e}") from None


def region(model: SpaceModel, spec, named: dict | None = None) -> frozenset:
    named = named or {}
    if spec == "X":
        return model.X
    if isinstance(spec, str):
        if spec not in named:
            raise ScenarioError(f"unknown set name {spec!r}")
        return named[spec]
    if not isinstance(spec, dict) or len(spec) not in (1, 2):
        raise ScenarioError(f"bad region spec {spec!r}")
    sub = lambda s: region(model, s, named)
    if "cells" in spec:
        out = frozenset(tuple(c) for c in spec["cells"])
    elif "pixels" in spec:
        px = frozenset()
        for r in spec["pixels"]:
            px |= M.pixel_block(*r)
        wrap = spec.get("wrap")
        if wrap == "closure":
            out = closure(model, px)
        elif wrap == "interior":
            out = interior(model, closure(model, px) & model.X)
        elif wrap is None:
            out = px
        else:
            raise ScenarioError(f"unknown wrap {wrap!r}")
    elif "row" in spec:
        out = M.row(model, spec["row"])
    elif "column" in spec:
        out = M.column(model, spec["column"])
    elif "ring" in spec:
        out = M.ring(model, *spec["ring"])
    elif "half" in spec:
        out = M.half(model, *spec["half"])
    elif "union" in spec:
        out = frozenset().union(*(sub(s) for s in spec["union"]))
    elif "intersect" in spec:
        parts = [sub(s) for s in spec["intersect"]]
        out = parts[0].intersection(*parts[1:])
    elif "minus" in spec:
        first, *rest = [sub(s) for s in spec["minus"]]
        out = first.difference(*rest)
    elif "star" in spec:
        out = star(model, sub(spec["star"]))
    elif "closure" in spec:
        out = closure(model, sub(spec["closure"]))
    elif "interior" in spec:
        out = interior(model, sub(spec["interior"]))
    elif "hull" in spec:
        out = solid_hull(model, sub(spec["hull"]))
    elif "complement" in spec:
        out = model.X - sub(spec["complement"])
    else:
        raise ScenarioError(f"bad region spec {spec!r}")
    stray = out - model.X
    if stray:
        raise ScenarioError(f"region has {len(stray)} cells outside X, e.g. {min(stray)}")
    return out


def parse_ssf(model: SpaceModel, spec: dict, named: dict) -> SolidSetFunction:
    kind = spec["kind"]
    params = dict(spec.get("params", {}))
    for key in ("point",):
        if key in params:
            params[key] = tuple(params[key])
    if "points" in params:
        params["points"] = [tuple(p) for p in params["points"]]
    for key in ("line", "boundary"):
        if key in params:
            params[key] = region(model, params[key], named) if not _is_cell_list(params[key]) \
                else [tuple(c) for c in params[key]]
    if "threshold" in params:
        params["threshold"] = Fraction(str(params["threshold"]))
    return make_builtin(kind, model, **params)


def _is_cell_list(v) -> bool:
    return isinstance(v, list) and all(isinstance(c, list) and len(c) == 2 for c in v)


# builtin scenarios ------------------------------------------------------------

BUILTIN = {
    "aarnes-punctured-square": {
        "model": {"widthPixels": 6, "heightPixels": 6, "infinity": {"cells": [[6, 6]]},
                  "name": "punctured-square-6"},
        "ssf": {"kind": "boundaryContainment", "params": {"boundary": "C"}},
        "sets": {
            "C": {"ring": [0, 0, 12, 12]},
            "U1": {"half": ["y", "gt", 6]},
            "U2": {"half": ["y", "lt", 6]},
            "F": {"half": ["y", "eq", 6]},
        },
        "expect": [
            {"mu": "F", "equals": 0}, {"mu": "U1", "equals": 0}, {"mu": "U2", "equals": 0},
            {"mu": "C", "equals": 1}, {"mu": "X", "equals": 1},
            {"family": "C", "in": "K_s"},
            {"cover": ["F", "U1", "U2"], "of": "X", "strictly_less": True},
        ],
    },
    "line-and-point": {
        "model": {"widthPixels": 6, "heightPixels": 6, "infinity": "frame", "name": "plane-6"},
        "ssf": {"kind": "pointLine", "params": {"point": [6, 8], "line": "l"}},
        "sets": {
            "l": {"row": 6},
            "F": {"half": ["y", "le", 6]},
            "XminusF": {"complement": "F"},
            "V": {"star": {"cells": [[6, 8]]}},
            "XminusV": {"complement": "V"},
        },
        "expect": [
            {"mu": "F", "equals": 0}, {"mu": "XminusF", "equals": 0}, {"mu": "X", "equals": 1},
            {"mu": "V", "equals": 0}, {"mu": "XminusV", "equals": 0},
            {"family": "V", "in": "O*"},
            {"cover": ["V", "XminusV"], "of": "X", "strictly_less": True, "disjoint": True},
            {"cover": ["F", "XminusF"], "of": "X", "strictly_less": True, "disjoint": True},
        ],
    },
    "two-point-area": {
        "model": {"widthPixels": 6, "heightPixels": 6, "infinity": "frame", "name": "plane-6"},
        "ssf": {"kind": "twoPointArea", "params": {"points": [[8, 8], [8, 6]]}},
        "sets": {
            "K1": {"cells": [[8, 8], [9, 8], [10, 8]]},
            "K2": {"cells": [[8, 6], [9, 6], [10, 6], [10, 7], [10, 8]]},
            "C": {"union": ["K1", "K2"]},
        },
        "expect": [
            {"eval": "K1", "equals": 1}, {"eval": "K2", "equals": 1}, {"eval": "C", "equals": 32},
            {"mu": "K1", "equals": 1}, {"mu": "K2", "equals": 1}, {"mu": "C", "equals": 32},
            {"mu": "X", "equals": 32},
            {"family": "K1", "in": "K_s"}, {"family": "K2", "in": "K_s"}, {"family": "C", "in": "K_s"},
            {"cover": ["K1", "K2"], "of": "C", "strictly_less": True, "measure": "eval"},
        ],
    },
    "area-threshold": {
        "model": {"widthPixels": 6, "heightPixels": 6, "infinity": "frame", "name": "plane-6"},
        "ssf": {"kind": "areaThreshold", "params": {"threshold": 5}},
        "sets": dict(
            {"block": {"pixels": [[3, 3, 7, 7]], "wrap": "closure"}},
            **{f"b{i}{j}": {"pixels": [[x, y, x, y]], "wrap": "closure"}
               for i, x in enumerate((3, 5, 7)) for j, y in enumerate((3, 5, 7))},
        ),
        "expect": (
            [{"mu": "block", "equals": 16}, {"family": "block", "in": "K_s"}]
            + [{"mu": f"b{i}{j}", "equals": 0} for i in range(3) for j in range(3)]
            + [{"cover": [f"b{i}{j}" for i in range(3) for j in range(3)], "of": "block",
                "strictly_less": True}]
        ),
    },
    "multi-point": {
        "model": {"widthPixels": 6, "heightPixels": 6, "infinity": "frame", "name": "plane-6"},
        "ssf": {"kind": "multiPointFraction", "params": {"n": 1, "points": [[4, 4], [6, 6], [8, 8]]}},
        "sets": {"diag": {"pixels": [[3, 3, 7, 7]], "wrap": "closure"}},
        "expect": [
            {"mu": "X", "equals": 1}, {"mu": "diag", "equals": 1},
            {"values_in": [0, 1]}, {"total_is_sup": True},
        ],
    },
    "strip-with-hole": {
        "model": {"widthPixels": 10, "heightPixels": 3, "infinity": "ends",
                  "holes": [{"cells": [[3, 3]]}], "name": "strip-with-hole-10x3"},
        "ssf": {"kind": "pointCounting", "params": {"points": [[10, 2]]}},
        "sets": {
            "A": {"intersect": [{"half": ["x", "ge", 6]}, {"half": ["x", "le", 14]}]},
            "P1": {"intersect": [{"half": ["x", "ge", 6]}, {"half": ["x", "le", 8]}]},
            "P2": {"intersect": [{"half": ["x", "gt", 8]}, {"half": ["x", "lt", 12]}]},
            "P3": {"intersect": [{"half": ["x", "ge", 12]}, {"half": ["x", "le", 14]}]},
        },
        "expect": [
            {"partition": ["P1", "P2", "P3"], "of": "A", "valid": True},
            {"family": "P1", "in": "K_s"}, {"family": "P2", "in": "O*_s"}, {"family": "P3", "in": "K_s"},
        ],
    },
}


def builtin(name: str) -> Scenario:
    if name not in BUILTIN:
        raise KeyError(name)
    return parse(BUILTIN[name], name=name)


def dump_builtin(name: str) -> str:
    doc = dict(BUILTIN[name])
    doc["name"] = name
    doc["schema"] = SCHEMA_VERSION
    return json.dumps(doc, indent=2)
