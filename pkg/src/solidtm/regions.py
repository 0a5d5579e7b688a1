"""Region taxonomy on a :class:`SpaceModel`: boundedness, solidity, hulls.

Family names follow the usual notation: ``O`` open, ``C`` closed, ``K``
compact, a trailing ``*`` for bounded, and subscripts ``c``/``s``/``ss`` for
connected/solid/semi-solid.  ``A*`` is ``K u O*``.
"""

from __future__ import annotations

import random
from functools import lru_cache
from dataclasses import dataclass, asdict
from typing import Iterable

from .cellspace import (
    SpaceModel, canonical, closure, components, interior, is_closed, is_open,
    raw_faces, sort_key, star,
)


class RegionError(ValueError):
    code = "RegionError"

    def __str__(self):
        return f"{self.code}: {super().__str__()}"


class EmptyRegion(RegionError):
    code = "EmptyRegion"


class PreconditionViolated(RegionError):
    code = "PreconditionViolated"


@dataclass(frozen=True)
class RegionClass:
    open: bool
    closed: bool
    bounded: bool
    connected: bool
    solid: bool
    semi_solid: bool
    complement_components: int
    bounded_complement_components: int

    @property
    def compact(self) -> bool:
        return self.closed and self.bounded

    @property
    def in_K0(self) -> bool:
        # finite model: every compact set has finitely many compact components
        return self.compact

    def families(self) -> dict[str, bool]:
        o, k, b = self.open, self.compact, self.bounded
        c, s, ss = self.connected, self.solid, self.semi_solid
        return {
            "O": o, "C": self.closed, "K": k, "O*": o and b, "A*": k or (o and b),
            "K_c": k and c, "K_s": k and s, "K_ss": k and ss,
            "O*_c": o and b and c, "O*_s": o and b and s, "O*_ss": o and b and ss,
            "A*_c": (k or (o and b)) and c,
            "A*_s": (k or (o and b)) and s, "A*_ss": (k or (o and b)) and ss,
            "K0": self.in_K0,
        }

    def as_dict(self) -> dict:
        d = asdict(self)
        d["compact"] = self.compact
        d["families"] = self.families()
        return d


def is_bounded(model: SpaceModel, S: Iterable) -> bool:
    return not (closure(model, S) & model.infinity)


def is_compact(model: SpaceModel, S: Iterable) -> bool:
    S = frozenset(S)
    return closure(model, S) == S and S <= model.X


def complement_split(model: SpaceModel, A: Iterable) -> tuple[list, list]:
    """Components of ``X - A`` split into (bounded, unbounded)."""
    bdd, unb = _complement_split(model, frozenset(A))
    return list(bdd), list(unb)


@lru_cache(maxsize=65536)
def _complement_split(model, A):
    bounded, unbounded = [], []
    for part in components(model, model.X - A):
        (bounded if is_bounded(model, part) else unbounded).append(part)
    return tuple(bounded), tuple(unbounded)


def classify(model: SpaceModel, S: Iterable) -> RegionClass:
    return _classify(model, frozenset(S))


@lru_cache(maxsize=65536)
def _classify(model, S):
    if not S:
        raise EmptyRegion("classification needs a nonempty set")
    if not S <= model.X:
        raise PreconditionViolated("set is not contained in X")
    connected = len(components(model, S)) == 1
    bdd, unb = complement_split(model, S)
    return RegionClass(
        open=is_open(model, S),
        closed=is_closed(model, S),
        bounded=is_bounded(model, S),
        connected=connected,
        # X itself is clopen and unbounded; solidity is only meaningful inside A*
        solid=connected and not bdd and S != model.X,
        semi_solid=connected,
        complement_components=len(bdd) + len(unb),
        bounded_complement_components=len(bdd),
    )


def in_family(model: SpaceModel, S: Iterable, family: str) -> bool:
    S = frozenset(S)
    if not S:
        return False
    return classify(model, S).families()[family]


def solid_hull(model: SpaceModel, A: Iterable) -> frozenset:
    A = frozenset(A)
    if not in_family(model, A, "A*_c"):
        raise PreconditionViolated("solid hull needs a bounded connected open or compact set")
    bdd, _ = complement_split(model, A)
    return A.union(*bdd)


def max_compact_subset(model: SpaceModel, U: Iterable) -> frozenset:
    """The largest compact subset of an open set ``U``."""
    U = frozenset(U)
    if not is_open(model, U):
        raise PreconditionViolated("max_compact_subset needs an open set")
    return frozenset(c for c in U if all(f in U for f in raw_faces(c)))


def min_open_superset(model: SpaceModel, F: Iterable) -> frozenset:
    return star(model, F)


def k0_components(model: SpaceModel, K: Iterable) -> list[frozenset]:
    K = frozenset(K)
    if not is_compact(model, K):
        raise PreconditionViolated("k0_components needs a compact set")
    return components(model, K)


def solid_interpolate(model: SpaceModel, K: Iterable, U: Iterable) -> frozenset:
    """Compact solid ``C`` with ``K <= C <= U`` for compact ``K`` in open solid bounded ``U``.

    Grows ``K`` to the component of ``max_compact_subset(U)`` that holds it and
    takes the hull.  Raises when ``K`` straddles several such components,
    which the grid cannot bridge with compact cells.
    """
    K, U = frozenset(K), frozenset(U)
    if not is_compact(model, K) or not K <= U or not in_family(model, U, "O*_s"):
        raise PreconditionViolated("need compact K inside an open solid bounded U")
    core = max_compact_subset(model, U)
    parts = [p for p in components(model, core) if p & K] if K else components(model, core)[:1]
    if len(parts) != 1:
        raise PreconditionViolated("K meets several compact components of U")
    return solid_hull(model, parts[0])


def partition_problems(model: SpaceModel, A: Iterable, pieces: list) -> list[str]:
    """Reason codes why ``pieces`` is not a solid partition of ``A`` (empty if it is)."""
    A = frozenset(A)
    pieces = [frozenset(p) for p in pieces]
    problems = []
    if any(not p for p in pieces):
        problems.append("empty-piece")
    seen = set()
    for p in pieces:
        if seen & p:
            problems.append("overlap")
            break
        seen |= p
    if seen != A:
        problems.append("union-mismatch")
    if not in_family(model, A, "A*_s"):
        problems.append("whole-not-bounded-solid")
    for i, p in enumerate(pieces):
        if p and not in_family(model, p, "A*_s"):
            problems.append(f"piece-{i}-not-bounded-solid")
    return problems


def verify_solid_partition(model: SpaceModel, A: Iterable, pieces: list) -> bool:
    return not partition_problems(model, A, pieces)


def search_solid_partitions(model: SpaceModel, A: Iterable, rng: random.Random,
                            budget: int) -> list[list[frozenset]]:
    """Budgeted search for nontrivial solid partitions of ``A``.

    Proposals cut ``A`` by a compact solid piece grown inside it, then split
    the rest into components; a proposal is kept when every part is bounded
    solid.  Finding nothing is evidence, not proof.
    """
    A = frozenset(A)
    found = []
    cells = canonical(A)
    if not cells:
        return found
    for _ in range(budget):
        seed = rng.choice(cells)
        grown = _grow(model, A, seed, rng, rng.randint(1, max(1, len(cells) // 2)))
        for piece in (closure(model, grown), interior(model, grown), grown):
            if not piece or piece == A or not piece <= A:
                continue
            rest = A - piece
            parts = [piece] + components(model, rest)
            if all(in_family(model, p, "A*_s") for p in parts):
                found.append(sorted(parts, key=lambda p: sort_key(min(p, key=sort_key))))
    return found


def _grow(model, A, seed, rng, size):
    region = {seed}
    frontier = [seed]
    while frontier and len(region) < size:
        c = frontier.pop(rng.randrange(len(frontier)))
        for n in model.neighbors(c):
            if n in A and n not in region:
                region.add(n)
                frontier.append(n)
    return frozenset(region)
