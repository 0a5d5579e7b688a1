"""Extension of a solid-set function to a topological measure.

``lambda1`` handles compact connected (and bounded semi-solid) sets by
subtracting the holes from the hull, ``lambda2`` sums ``lambda1`` over the
components of a compact set, and ``mu`` extends to all open and closed sets.

The supremum over compact subsets of an open ``U`` is attained at the
largest compact subset of ``U`` because ``lambda2`` is monotone, and the
infimum over open supersets of a closed ``F`` is attained at the smallest
open superset because ``mu`` is monotone on opens.  ``mu_oracle`` computes
the supremum literally for cross-checking.
"""

from __future__ import annotations

import math
from typing import Iterable

from .cellspace import SpaceModel, components, is_closed, is_open
from .enumeration import compact_subsets
from .regions import (
    PreconditionViolated, RegionError, classify, complement_split, is_compact,
    max_compact_subset, min_open_superset,
)
from .ssf import SolidSetFunction, eval_ssf

INF = math.inf


class NotOpenNorClosed(RegionError):
    code = "NotOpenNorClosed"


class TooLarge(RegionError):
    code = "TooLarge"


class InvalidSolidSetFunction(ValueError):
    """A hole outweighs its hull, so the input cannot be a solid-set function."""


def lambda1(ssf: SolidSetFunction, model: SpaceModel, A: Iterable):
    A = frozenset(A)
    cls = classify(model, A)
    fam = cls.families()
    if not (fam["A*_ss"] or fam["K_c"]):
        raise PreconditionViolated("lambda1 needs a bounded semi-solid or compact connected set")
    holes, outside = complement_split(model, A)
    hull = A.union(*holes)
    value = eval_ssf(ssf, model, hull, check=False)
    for B in holes:
        value -= eval_ssf(ssf, model, B, check=False)
    if value < 0:
        raise InvalidSolidSetFunction(
            f"{ssf.describe()}: holes of a {len(A)}-cell set outweigh its hull ({value})")
    return value


def lambda2(ssf: SolidSetFunction, model: SpaceModel, K: Iterable):
    K = frozenset(K)
    if not is_compact(model, K):
        raise PreconditionViolated("lambda2 needs a compact set")
    return sum((lambda1(ssf, model, part) for part in components(model, K)), 0)


def mu(ssf: SolidSetFunction, model: SpaceModel, S: Iterable, trace: dict | None = None):
    """Topological measure of an open or closed set (open wins for clopen ``X``)."""
    S = frozenset(S)
    if is_open(model, S):
        core = max_compact_subset(model, S)
        if trace is not None:
            trace["compact_witness"] = core
            trace["lambda1"] = [lambda1(ssf, model, p) for p in components(model, core)]
        return lambda2(ssf, model, core)
    if is_closed(model, S):
        nbhd = min_open_superset(model, S)
        if trace is not None:
            trace["open_witness"] = nbhd
        return mu(ssf, model, nbhd, trace)
    raise NotOpenNorClosed(f"{len(S)}-cell set is neither open nor closed")


def mu_oracle(ssf: SolidSetFunction, model: SpaceModel, U: Iterable, limit: int | None = 18):
    """Literal supremum of ``lambda2`` over every compact subset of open ``U``."""
    U = frozenset(U)
    if not is_open(model, U):
        raise PreconditionViolated("mu_oracle needs an open set")
    if limit is not None and len(U) > limit:
        raise TooLarge(f"{len(U)} cells exceed the enumeration limit {limit}")
    return max(lambda2(ssf, model, K) for K in compact_subsets(model, U))
