"""Solid-set functions: builtins, evaluation and an axiom checker.

Designated points and area live on vertices.  A vertex is the only kind of
cell that lies in the largest compact subset of every open set containing
it, so vertex-supported functions are the ones whose inner and outer
regularity survive discretization.  ``area`` lumps the unit mass of each
pixel whose closure lies in ``X`` onto the pixel's lower-left vertex, which
makes ``area(X)`` the number of such pixels.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from .cellspace import SpaceModel, canonical, closure, components, dimension, star
from .regions import (
    classify, complement_split, in_family, is_bounded, max_compact_subset,
    search_solid_partitions, solid_hull,
)

KINDS = ("pointCounting", "pointLine", "boundaryContainment", "twoPointArea",
         "areaThreshold", "multiPointFraction", "custom")


class SSFError(ValueError):
    code = "SSFError"

    def __str__(self):
        return f"{self.code}: {super().__str__()}"


class BadParameters(SSFError):
    code = "BadParameters"


class NotBoundedSolid(SSFError):
    code = "NotBoundedSolid"


class AxiomCheckFailed(SSFError):
    code = "AxiomCheckFailed"

    def __init__(self, report):
        super().__init__(report.summary())
        self.report = report


def area_weights(model: SpaceModel) -> dict:
    X = model.X
    out = {}
    for p in model.pixels:
        if closure(model, [p]) <= X:
            out[(p[0] - 1, p[1] - 1)] = 1
    return out


def area(model: SpaceModel, A: Iterable) -> int:
    w = area_weights_cached(model)
    return sum(w.get(c, 0) for c in A)


_AREA_CACHE: dict = {}


def area_weights_cached(model: SpaceModel) -> dict:
    if model not in _AREA_CACHE:
        _AREA_CACHE[model] = area_weights(model)
    return _AREA_CACHE[model]


@dataclass(frozen=True)
class SolidSetFunction:
    kind: str
    params: dict = field(default_factory=dict, hash=False, compare=False)
    fn: Callable = field(default=None, repr=False, hash=False, compare=False)

    def __call__(self, model: SpaceModel, A: frozenset):
        return self.fn(model, A)

    def describe(self) -> str:
        shown = {k: v for k, v in self.params.items() if not callable(v)}
        return f"{self.kind}({shown})"


def eval_ssf(ssf: SolidSetFunction, model: SpaceModel, A: Iterable, check: bool = True):
    A = frozenset(A)
    if check and not in_family(model, A, "A*_s"):
        raise NotBoundedSolid(f"{len(A)}-cell set is not a bounded open or compact solid set")
    value = ssf(model, A)
    if value < 0:
        raise SSFError(f"{ssf.kind} returned a negative value {value}")
    return value


def _vertex_set(model, cells, what):
    cells = frozenset(tuple(c) for c in cells)
    for c in cells:
        if c not in model.X:
            raise BadParameters(f"{what} cell {c} is not in X")
        if dimension(c) != 0:
            raise BadParameters(f"{what} cell {c} is not a vertex")
    return cells


def make_builtin(kind: str, model: SpaceModel, strict: bool = False, **params) -> SolidSetFunction:
    """Build one of the example solid-set functions on ``model``.

    Parameters per kind:

    * pointCounting: ``points`` (vertices), optional ``weights``
    * pointLine: ``point`` (vertex), ``line`` (cells; its vertices count)
    * boundaryContainment: ``boundary`` (cells), optional ``point``
    * twoPointArea: ``points`` (two vertices)
    * areaThreshold: ``threshold`` (>= 0)
    * multiPointFraction: ``n`` (>= 1), ``points`` (2n+1 vertices)
    * custom: ``fn(model, A) -> value``
    """
    if kind == "pointCounting":
        pts = canonical(_vertex_set(model, params.get("points", ()), "point"))
        weights = params.get("weights") or [1] * len(pts)
        if len(weights) != len(pts) or any(w < 0 for w in weights):
            raise BadParameters("need one non-negative weight per point")
        table = dict(zip(pts, weights))
        fn = lambda m, A: sum(w for p, w in table.items() if p in A)
    elif kind == "pointLine":
        (p,) = _vertex_set(model, [params["point"]], "point")
        line = frozenset(tuple(c) for c in params["line"])
        lv = frozenset(c for c in line if dimension(c) == 0 and c in model.X)
        if p in line:
            raise BadParameters("the point must not lie on the line")
        if not lv:
            raise BadParameters("the line has no vertices in X")
        fn = lambda m, A: 1 if p in A and not lv.isdisjoint(A) else 0
    elif kind == "boundaryContainment":
        bnd = frozenset(tuple(c) for c in params["boundary"])
        bv = frozenset(c for c in bnd if dimension(c) == 0 and c in model.X)
        if not bv:
            raise BadParameters("the boundary has no vertices in X")
        point = params.get("point")
        if point is not None:
            (point,) = _vertex_set(model, [point], "point")
            if point in bnd:
                raise BadParameters("the point must not lie on the boundary")

        def fn(m, A):
            if bv <= A:
                return 1
            return 1 if point is not None and point in A and not bv.isdisjoint(A) else 0
    elif kind == "twoPointArea":
        pts = _vertex_set(model, params.get("points", ()), "point")
        if len(pts) != 2:
            raise BadParameters("twoPointArea needs exactly two distinct points")
        total = area(model, model.X)

        def fn(m, A):
            k = len(pts & A)
            return (0, area(m, A), 2 * total)[k]
    elif kind == "areaThreshold":
        theta = Fraction(params.get("threshold", 1))
        if theta < 0:
            raise BadParameters("threshold must be non-negative")

        def fn(m, A):
            a = area(m, A)
            return 0 if a < theta else a
    elif kind == "multiPointFraction":
        n = int(params.get("n", 1))
        pts = _vertex_set(model, params.get("points", ()), "point")
        if n < 1 or len(pts) != 2 * n + 1:
            raise BadParameters("multiPointFraction needs n >= 1 and 2n+1 distinct points")
        fn = lambda m, A: Fraction(len(pts & A) // 2, n)
    elif kind == "custom":
        fn = params.get("fn")
        if not callable(fn):
            raise BadParameters("custom kind needs a callable fn(model, A)")
    else:
        raise BadParameters(f"unknown kind {kind!r}")
    ssf = SolidSetFunction(kind, dict(params), fn)
    if strict:
        report = check_axioms(ssf, model, generate_solid_catalog(model, seed=0, budget=60))
        if not report.passed:
            raise AxiomCheckFailed(report)
    return ssf


# catalog -------------------------------------------------------------------

def generate_solid_catalog(model: SpaceModel, seed: int, budget: int) -> list[frozenset]:
    """Deterministic bounded solid sets: up to ``budget`` compact ones plus open companions.

    Compact members are hulls of closed pixel polyominoes and of lattice
    edge walks.  The open companion of a compact solid ``K`` is the hull of
    its star.  Only sets the grid resolves are kept (see :func:`resolved`).
    """
    rng = random.Random(seed)
    safe = [v for v in canonical(model.vertices)
            if not closure(model, star(model, closure(model, star(model, [v])))) & model.infinity]
    if not safe:
        return []
    out, seen = [], set()
    n_compact = 0
    for _ in range(100 * budget):
        if n_compact >= budget:
            break
        x, y = rng.choice(safe)
        if rng.random() < 0.6:
            # polyomino grown from a pixel touching the seed vertex
            blob = {(x + rng.choice((-1, 1)), y + rng.choice((-1, 1)))}
            step, size = 2, rng.randint(1, 7)
        else:
            blob = {(x, y)}
            step, size = 1, rng.randint(2, 9)
        cur = next(iter(blob))
        for _ in range(size - 1):
            if step == 2:
                cur = rng.choice(sorted(blob))
            dx, dy = rng.choice(((step, 0), (-step, 0), (0, step), (0, -step)))
            nxt = (cur[0] + dx, cur[1] + dy)
            if nxt in model.X:
                blob.add(nxt)
                cur = nxt
        K = closure(model, blob)
        if not K <= model.X or not is_bounded(model, K) or len(components(model, K)) != 1:
            continue
        K = solid_hull(model, K)
        if K in seen or not resolved(model, K):
            continue
        seen.add(K)
        out.append(K)
        n_compact += 1
        U = solid_hull(model, star(model, K))
        if U not in seen and resolved(model, U):
            seen.add(U)
            out.append(U)
    return out


def resolved(model: SpaceModel, A: frozenset) -> bool:
    """Whether a bounded solid set is separated from grid artifacts.

    Compact: its smallest open superset is bounded and solid.  Open: its
    largest compact subset is nonempty and connected.
    """
    if not in_family(model, A, "A*_s"):
        return False
    cls = classify(model, A)
    if cls.compact:
        S = star(model, A)
        return is_bounded(model, S) and not complement_split(model, S)[0]
    core = max_compact_subset(model, A)
    return bool(core) and len(components(model, core)) == 1


# axiom checker -------------------------------------------------------------

@dataclass
class AxiomReport:
    checked: int = 0
    violations: dict = field(default_factory=lambda: {"s1": [], "s2": [], "s3": [], "s4": []})
    skipped: int = 0

    @property
    def passed(self) -> bool:
        return not any(self.violations.values())

    def summary(self) -> str:
        counts = ", ".join(f"{k}={len(v)}" for k, v in self.violations.items())
        return f"{'passed' if self.passed else 'FAILED'} after {self.checked} checks ({counts})"


def check_axioms(ssf: SolidSetFunction, model: SpaceModel, catalog: list,
                 partition_budget: int = 20, partitions: Iterable = (),
                 seed: int = 0) -> AxiomReport:
    """Empirically check superadditivity, both regularities and solid-partition additivity.

    Regularity uses the exact extremal witnesses: every compact solid subset of
    an open ``U`` lies in the hull of one component of ``max_compact_subset(U)``,
    and every open solid superset of a compact ``K`` contains the hull of its
    star.  Sets whose star is unbounded have no bounded open superset on the
    grid; they are counted as skipped for (s3).
    """
    rng = random.Random(seed)
    rep = AxiomReport()
    catalog = [frozenset(A) for A in catalog]
    val = {A: eval_ssf(ssf, model, A) for A in catalog}
    compacts = [A for A in catalog if classify(model, A).compact]

    def ev(A):
        if A not in val:
            val[A] = eval_ssf(ssf, model, A)
        return val[A]

    # (s1): disjoint compact solids inside a compact solid
    for C in compacts:
        inside = [K for K in compacts if K < C]
        rng.shuffle(inside)
        family = []
        for K in inside:
            if all(K.isdisjoint(F) for F in family):
                family.append(K)
        for i in range(1, len(family) + 1):
            rep.checked += 1
            total = sum(ev(K) for K in family[:i])
            if total > ev(C):
                rep.violations["s1"].append({"C": C, "family": family[:i], "sum": total, "value": ev(C)})
                break

    for A in catalog:
        cls = classify(model, A)
        if cls.open:
            rep.checked += 1
            core = max_compact_subset(model, A)
            best = max((ev(solid_hull(model, D)) for D in components(model, core)), default=0)
            if best != ev(A):
                rep.violations["s2"].append({"U": A, "value": ev(A), "sup": best})
        if cls.compact:
            S = star(model, A)
            if not is_bounded(model, S):
                rep.skipped += 1
                continue
            rep.checked += 1
            witness = solid_hull(model, S)
            if ev(witness) != ev(A):
                rep.violations["s3"].append({"K": A, "value": ev(A), "inf": ev(witness), "witness": witness})

    # (s4): supplied and searched solid partitions
    cases = [(frozenset(A), [frozenset(p) for p in parts]) for A, parts in partitions]
    for A in catalog[: max(1, len(catalog) // 4)]:
        for parts in search_solid_partitions(model, A, rng, partition_budget):
            cases.append((A, parts))
    for A, parts in cases:
        rep.checked += 1
        total = sum(ev(p) for p in parts)
        if total != ev(A):
            rep.violations["s4"].append({"A": A, "pieces": parts, "sum": total, "value": ev(A)})
    return rep
