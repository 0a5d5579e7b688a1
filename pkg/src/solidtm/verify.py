"""Named property suites and witness scenarios.

Every suite is deterministic in ``(seed, budget)``.  Checks that rely on
continuum lemmas which the grid only satisfies above its resolution run on
resolved configurations (see :func:`deep_pair` and :func:`separated`).
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import scenario as sc
from .cellspace import (
    SpaceModel, canonical, closure, components, interior, is_closed, is_open, star,
)
from .enumeration import open_sets
from .extend import lambda2, mu, mu_oracle
from .regions import (
    classify, complement_split, in_family, is_bounded, max_compact_subset, min_open_superset,
    partition_problems, search_solid_partitions, solid_hull,
)
from .ssf import check_axioms, eval_ssf, generate_solid_catalog

SUITES = ("topology-basics", "hull-props", "ssf-axioms", "tm-axioms",
          "extension-consistency", "oracle-equivalence", "witnesses", "partition-genus")


class UnknownSuite(KeyError):
    code = "UnknownSuite"


class UnknownScenario(KeyError):
    code = "UnknownScenario"


@dataclass
class SuiteReport:
    suite: str
    cases_run: int = 0
    failures: list = field(default_factory=list)
    seed: int = 0
    elapsed: float = 0.0
    notes: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, case, witness=None, expected=None, actual=None):
        self.failures.append({"case": case, "witness": witness, "expected": expected, "actual": actual})

    def check(self, ok: bool, case, witness=None, expected=None, actual=None):
        self.cases_run += 1
        if isinstance(case, tuple):
            kinds = self.notes.setdefault("cases", {})
            kinds[case[0]] = kinds.get(case[0], 0) + 1
        if not ok:
            self.fail(case, witness, expected, actual)

    def summary(self) -> str:
        state = "passed" if self.passed else f"FAILED ({len(self.failures)})"
        return f"{self.suite}: {state}, {self.cases_run} cases, seed {self.seed}, {self.elapsed:.2f}s"


# random regions ---------------------------------------------------------------

def random_subset(model: SpaceModel, rng: random.Random) -> frozenset:
    cells = canonical(model.X)
    p = rng.choice((0.1, 0.3, 0.6))
    return frozenset(c for c in cells if rng.random() < p)


def random_blob(model: SpaceModel, rng: random.Random, size: int | None = None,
                within: frozenset | None = None) -> frozenset:
    within = model.X if within is None else within
    start = rng.choice(canonical(within))
    blob, frontier = {start}, [start]
    size = size or rng.randint(1, 30)
    while frontier and len(blob) < size:
        c = frontier.pop(rng.randrange(len(frontier)))
        for n in model.neighbors(c):
            if n in within and n not in blob:
                blob.add(n)
                frontier.append(n)
    return frozenset(blob)


def random_open(model, rng):
    return star(model, random_blob(model, rng))


def random_closed(model, rng):
    return closure(model, random_blob(model, rng)) & model.X


def fat_open(model, rng):
    S = star(model, random_blob(model, rng, rng.randint(1, 6)))
    for _ in range(rng.randint(1, 3)):
        S = star(model, closure(model, S) & model.X)
    return S


def neighborhood(model: SpaceModel, S) -> frozenset:
    return (closure(model, S) | star(model, S)) & model.complex


def separated(model: SpaceModel, parts) -> bool:
    """Pairwise disjoint stars: the grid stand-in for disjoint closures."""
    stars = [star(model, p) for p in parts]
    return all(stars[i].isdisjoint(stars[j]) for i in range(len(stars)) for j in range(i))


def deep_pair(model: SpaceModel, K, U) -> bool:
    """``K`` sits well inside ``U``: the neighbourhood of its star is in U's compact core."""
    return (neighborhood(model, star(model, K)) <= max_compact_subset(model, U)
            and separated(model, components(model, K)))


def deep_cells(model: SpaceModel, radius: int = 4) -> frozenset:
    """Cells at Chebyshev distance more than ``radius`` from the infinity locus and holes."""
    bad = model.infinity | model.removed
    return frozenset(c for c in model.X if not any(
        (c[0] + dx, c[1] + dy) in bad
        for dx in range(-radius, radius + 1) for dy in range(-radius, radius + 1)))


def sample_deep_pair(model: SpaceModel, rng: random.Random, tries: int = 50):
    inner = deep_cells(model, 3)
    if not inner:
        return None
    for _ in range(tries):
        K = closure(model, random_blob(model, rng, rng.randint(1, 8), inner))
        if rng.random() < 0.3:
            K |= closure(model, random_blob(model, rng, rng.randint(1, 5), inner))
        if not K <= model.X:
            continue
        N = neighborhood(model, star(model, K))
        if not closure(model, N) <= model.X:
            continue
        U = star(model, closure(model, N))
        if rng.random() < 0.5:
            U |= fat_open(model, rng)
        if deep_pair(model, K, U):
            return K, U
    return None


def _rand_compact_in(model, U, rng):
    core = canonical(max_compact_subset(model, U))
    if not core:
        return frozenset()
    return closure(model, rng.sample(core, rng.randint(1, min(len(core), 8))))


# suites -------------------------------------------------------------------------

def run_suite(name: str, model: SpaceModel, ssf=None, seed: int = 0, budget: int = 1000) -> SuiteReport:
    if name not in _SUITES:
        raise UnknownSuite(name)
    rep = SuiteReport(name, seed=seed)
    t = time.perf_counter()
    _SUITES[name](rep, model, ssf, random.Random(seed), budget)
    rep.elapsed = time.perf_counter() - t
    return rep


def _topology(rep, m, ssf, rng, budget):
    X = m.X
    for i in range(budget):
        S, T = random_subset(m, rng), random_subset(m, rng)
        cl, it = closure(m, S) & X, interior(m, S)
        rep.check(it <= S <= cl, ("sandwich", i), S)
        rep.check(closure(m, cl) & X == cl and interior(m, it) == it, ("idempotent", i), S)
        rep.check(X - cl == interior(m, X - S), ("de-morgan", i), S)
        if S <= T:
            rep.check(cl <= closure(m, T) and it <= interior(m, T), ("monotone", i), (S, T))
        U, V = random_open(m, rng), random_open(m, rng)
        rep.check(is_open(m, U | V) and is_open(m, U & V), ("open-lattice", i), (U, V))
        rep.check(is_closed(m, X - U) and is_closed(m, (X - U) | (X - V)), ("closed-lattice", i), (U, V))
        parts = components(m, S)
        ok = sum(map(len, parts)) == len(S) and frozenset().union(*parts) == S
        # maximality: no two components touch
        ok = ok and all(p.isdisjoint(neighborhood(m, q)) for a, p in enumerate(parts) for q in parts[:a])
        rep.check(ok, ("components", i), S)


def _hull(rep, m, ssf, rng, budget):
    # keep drawing until every property has seen ``budget`` cases
    kinds = ("hull-idempotent", "hull-monotone", "trichotomy", "decomposition", "unbounded-count")
    done = attempts = 0
    while attempts < 200 * max(budget, 1):
        counts = rep.notes.get("cases", {})
        if all(counts.get(k, 0) >= budget for k in kinds):
            break
        attempts += 1
        A = random_closed(m, rng) if rng.random() < 0.5 else random_open(m, rng)
        if not A or not in_family(m, A, "A*_c"):
            continue
        done += 1
        H = solid_hull(m, A)
        holes, _ = complement_split(m, A)
        rep.check(A <= H and solid_hull(m, H) == H, ("hull-idempotent", done), A)
        rep.check(in_family(m, H, "A*_s"), ("hull-solid", done), A)
        rep.check(all(in_family(m, B, "A*_s") for B in holes), ("holes-solid", done), A)
        rep.check(classify(m, H).open == classify(m, A).open, ("hull-type", done), A)
        if classify(m, A).compact:
            B = closure(m, A | random_blob(m, rng, 3)) & m.X
            if in_family(m, B, "K_c"):
                rep.check(H <= solid_hull(m, B), ("hull-monotone", done), (A, B))
        _, unbounded = complement_split(m, A)
        rep.check(len(unbounded) == len([D for D in components(m, m.X - A) if not is_bounded(m, D)]),
                  ("unbounded-count", done), A)
        # trichotomy against a disjoint partner
        B = random_closed(m, rng) if rng.random() < 0.5 else random_open(m, rng)
        B = B - A
        if B and in_family(m, B, "A*_c"):
            HB = solid_hull(m, B)
            ok = H.isdisjoint(HB) or H < HB or HB < H
            rep.check(ok, ("trichotomy", done), (A, B))
        # decomposition of an open solid around a compact solid inside it
        if classify(m, A).open:
            V = H
            core = max_compact_subset(m, V)
            if core:
                C = closure(m, random_blob(m, rng, rng.randint(1, 6), core))
                if in_family(m, C, "K_c") and solid_hull(m, C) <= V:
                    C = solid_hull(m, C)
                    parts = components(m, V - C)
                    if len(parts) > 1:
                        ok = all(in_family(m, P, "O*_s") for P in parts)
                    else:
                        ok = not parts or in_family(m, parts[0], "O*_ss")
                    rep.check(ok, ("decomposition", done), (V, C))


def _ssf_axioms(rep, m, ssf, rng, budget):
    cat = generate_solid_catalog(m, rng.randrange(1 << 30), max(10, budget // 10))
    ar = check_axioms(ssf, m, cat, seed=rng.randrange(1 << 30))
    rep.cases_run += ar.checked
    rep.notes["skipped"] = ar.skipped
    for axiom, items in ar.violations.items():
        for v in items:
            rep.fail(axiom, v)


def _tm(rep, m, ssf, rng, budget):
    unseparated = [0, 0]
    for i in range(budget):
        U = random_open(m, rng)
        rep.check(mu(ssf, m, U) == lambda2(ssf, m, max_compact_subset(m, U)), ("TM2", i), U)
        F = random_closed(m, rng)
        rep.check(mu(ssf, m, F) == mu(ssf, m, min_open_superset(m, F)), ("TM3", i), F)
        K = _rand_compact_in(m, U, rng)
        if K:
            rep.check(mu(ssf, m, K) <= mu(ssf, m, U), ("TM2-sup", i), (K, U))
        # TM1 on disjoint pairs of compacts or of opens
        compact = rng.random() < 0.5
        A = closure(m, random_blob(m, rng, rng.randint(1, 8))) & m.X
        if compact and not classify(m, A).compact or not A:
            continue
        away = m.X - closure(m, star(m, A)) if rng.random() < 0.8 else m.X - A
        if not away:
            continue
        B = closure(m, random_blob(m, rng, rng.randint(1, 8), away)) & m.X
        if not compact:
            A, B = star(m, A), star(m, B)
        if A & B or compact and not classify(m, B).compact:
            continue
        union = A | B
        lhs, rhs = mu(ssf, m, union), mu(ssf, m, A) + mu(ssf, m, B)
        if separated(m, [A, B]):
            rep.check(lhs == rhs, ("TM1", i), (A, B), rhs, lhs)
        else:
            unseparated[0] += 1
            unseparated[1] += lhs != rhs
    rep.notes["tm1-unseparated-pairs"] = unseparated[0]
    rep.notes["tm1-unseparated-failures"] = unseparated[1]


def _extension(rep, m, ssf, rng, budget):
    # master lemma on deep pairs
    n = nonzero = 0
    while n < budget:
        pair = sample_deep_pair(m, rng)
        if pair is None:
            break
        K, U = pair
        n += 1
        a, b, c = mu(ssf, m, U), mu(ssf, m, K), mu(ssf, m, U - K)
        nonzero += a != 0
        rep.check(a == b + c, ("master", n), (K, U), a, b + c)
    rep.notes["deep-pairs"] = n
    rep.notes["deep-pairs-nonzero"] = nonzero
    # disjoint open additivity
    for i in range(budget // 4):
        U, V = random_open(m, rng), random_open(m, rng)
        V = V - closure(m, U)
        V = interior(m, V)
        if not V or not U:
            continue
        rep.check(mu(ssf, m, U | V) == mu(ssf, m, U) + mu(ssf, m, V), ("open-additive", i), (U, V))
    # mu agrees with the solid-set function and mu(X) is the supremum
    cat = generate_solid_catalog(m, rng.randrange(1 << 30), max(10, budget // 20))
    for A in cat:
        rep.check(mu(ssf, m, A) == eval_ssf(ssf, m, A), ("mu=lambda", canonical(A)[:1]), A)
    rep.check(mu(ssf, m, m.X) == total_sup(ssf, m, cat), ("value-of-X",), None,
              total_sup(ssf, m, cat), mu(ssf, m, m.X))


def total_sup(ssf, model: SpaceModel, catalog=()) -> object:
    """Largest value on compact solid sets from ``catalog`` and the hulls of X's compact core."""
    cands = [A for A in catalog if classify(model, A).compact]
    cands += [solid_hull(model, D) for D in components(model, max_compact_subset(model, model.X))]
    return max((eval_ssf(ssf, model, A) for A in cands), default=0)


def _oracle(rep, m, ssf, rng, budget):
    if len(m.X) <= 18:
        opens = list(open_sets(m))
    else:
        opens = []
        for _ in range(budget):
            U = star(m, random_blob(m, rng, rng.randint(1, 4)))
            if len(U) <= 18:
                opens.append(U)
    for U in opens:
        a, b = mu(ssf, m, U), mu_oracle(ssf, m, U)
        rep.check(a == b, ("oracle", canonical(U)[:3]), U, b, a)


def _witnesses(rep, m, ssf, rng, budget):
    for name in sc.BUILTIN:
        s = sc.builtin(name)
        if s.model == m:
            sub = run_witness(s)
            rep.cases_run += sub.cases_run
            rep.failures += sub.failures


def _partition(rep, m, ssf, rng, budget):
    cat = generate_solid_catalog(m, rng.randrange(1 << 30), max(10, budget // 10))
    found = []
    for A in cat:
        found += [(A, p) for p in search_solid_partitions(m, A, rng, 20)]
        rep.cases_run += 1
    rep.notes["partitions-found"] = len(found)
    genus0 = not m.removed
    if genus0:
        for A, parts in found:
            rep.fail("nontrivial-partition", (A, parts), "none", len(parts))
    else:
        strip = sc.builtin("strip-with-hole")
        if strip.model == m:
            sub = run_witness(strip)
            rep.cases_run += sub.cases_run
            rep.failures += sub.failures


_SUITES = {
    "topology-basics": _topology,
    "hull-props": _hull,
    "ssf-axioms": _ssf_axioms,
    "tm-axioms": _tm,
    "extension-consistency": _extension,
    "oracle-equivalence": _oracle,
    "witnesses": _witnesses,
    "partition-genus": _partition,
}


# witnesses ------------------------------------------------------------------------

def run_witness(scenario) -> SuiteReport:
    """Check a scenario's declared expectations; accepts a Scenario or a builtin name."""
    if isinstance(scenario, str):
        if scenario not in sc.BUILTIN:
            raise UnknownScenario(scenario)
        scenario = sc.builtin(scenario)
    rep = SuiteReport(f"witness:{scenario.name}")
    t = time.perf_counter()
    m, f, sets = scenario.model, scenario.ssf, dict(scenario.sets)
    sets.setdefault("X", m.X)
    get = lambda k: sets[k]
    for e in scenario.expect:
        if "mu" in e:
            v = mu(f, m, get(e["mu"]))
            rep.check(v == _num(e["equals"]), e, e["mu"], e["equals"], v)
        elif "eval" in e:
            v = eval_ssf(f, m, get(e["eval"]))
            rep.check(v == _num(e["equals"]), e, e["eval"], e["equals"], v)
        elif "family" in e:
            rep.check(in_family(m, get(e["family"]), e["in"]), e, e["family"], e["in"])
        elif "cover" in e:
            parts = [get(k) for k in e["cover"]]
            whole = get(e["of"])
            measure = (lambda S: eval_ssf(f, m, S)) if e.get("measure") == "eval" else (lambda S: mu(f, m, S))
            total = sum(measure(p) for p in parts)
            ok = frozenset().union(*parts) >= whole and total < measure(whole)
            if e.get("disjoint"):
                ok = ok and sum(map(len, parts)) == len(frozenset().union(*parts))
            rep.check(ok, e, e["cover"], f"< {measure(whole)}", total)
        elif "partition" in e:
            parts = [get(k) for k in e["partition"]]
            probs = partition_problems(m, get(e["of"]), parts)
            rep.check(not probs, e, e["partition"], [], probs)
        elif "values_in" in e:
            allowed = {_num(v) for v in e["values_in"]}
            cat = generate_solid_catalog(m, 0, 40)
            bad = [A for A in cat if eval_ssf(f, m, A) not in allowed]
            rep.check(not bad, e, bad[:1], sorted(allowed), len(bad))
        elif "total_is_sup" in e:
            cat = generate_solid_catalog(m, 0, 40)
            sup, v = total_sup(f, m, cat), mu(f, m, m.X)
            rep.check(sup == v, e, None, sup, v)
        else:
            rep.fail(e, None, "known expectation", "unrecognized")
    if scenario.name == "strip-with-hole":
        # the same kind of partition must not exist on a genus-0 model
        from .models import plane
        p = plane()
        rng = random.Random(0)
        hits = 0
        for A in generate_solid_catalog(p, 0, 40):
            hits += len(search_solid_partitions(p, A, rng, 20))
        rep.check(hits == 0, "plane-has-no-solid-partition", None, 0, hits)
    rep.elapsed = time.perf_counter() - t
    return rep


def _num(v):
    return Fraction(str(v)) if isinstance(v, (int, float, str)) else v


def restriction_roundtrip(model: SpaceModel, ssf) -> SuiteReport:
    """Restrict mu to bounded solid sets, re-extend, and compare on every open and closed set.

    Enumerates all open sets, so only meant for small windows.
    """
    from .ssf import make_builtin

    rep = SuiteReport(f"roundtrip:{ssf.kind}")
    t = time.perf_counter()
    opens = list(open_sets(model))
    closeds = [model.X - U for U in opens]
    solids = sorted({A for A in opens + closeds if A and in_family(model, A, "A*_s")},
                    key=lambda A: (len(A), canonical(A)))
    restricted = make_builtin("custom", model, fn=lambda m, A: mu(ssf, m, A))
    ar = check_axioms(restricted, model, solids)
    rep.cases_run += ar.checked
    rep.notes["solids"] = len(solids)
    rep.notes["skipped"] = ar.skipped
    for axiom, items in ar.violations.items():
        for v in items:
            rep.fail(axiom, v)
    for S in opens + closeds:
        if not S:
            continue
        a, b = mu(restricted, model, S), mu(ssf, model, S)
        rep.check(a == b, ("re-extension", canonical(S)[:3]), S, b, a)
    rep.elapsed = time.perf_counter() - t
    return rep
