"""The ten acceptance criteria, each printing one PASS/FAIL line."""

import random
import time

import pytest

from solidtm import models as M
from solidtm import scenario as sc
from solidtm.cellspace import build_model, canonical
from solidtm.enumeration import open_sets
from solidtm.extend import mu, mu_oracle
from solidtm.regions import in_family, search_solid_partitions, verify_solid_partition
from solidtm.ssf import eval_ssf, generate_solid_catalog, make_builtin
from solidtm.verify import restriction_roundtrip, run_suite, total_sup


@pytest.fixture
def report(capsys):
    def emit(n, ok, detail):
        with capsys.disabled():
            print(f"\nACCEPTANCE {n}: {'PASS' if ok else 'FAIL'} - {detail}")
        return ok
    return emit


def values(s, names):
    return {k: (s.model.X if k == "X" else s.sets[k]) for k in names}


def test_1_punctured_square(report):
    t = time.perf_counter()
    s = sc.builtin("aarnes-punctured-square")
    got = {k: mu(s.ssf, s.model, v) for k, v in values(s, ["F", "U1", "U2", "C", "X"]).items()}
    dt = time.perf_counter() - t
    want = {"F": 0, "U1": 0, "U2": 0, "C": 1, "X": 1}
    ok = got == want and dt < 1
    assert report(1, ok, f"mu = {got}, {dt:.3f}s"), got


def test_2_line_and_point(report):
    t = time.perf_counter()
    s = sc.builtin("line-and-point")
    got = {k: mu(s.ssf, s.model, v) for k, v in values(s, ["F", "XminusF", "X", "V", "XminusV"]).items()}
    dt = time.perf_counter() - t
    disjoint = not (s.sets["V"] & s.sets["XminusV"]) and s.sets["V"] | s.sets["XminusV"] == s.model.X
    want = {"F": 0, "XminusF": 0, "X": 1, "V": 0, "XminusV": 0}
    ok = got == want and disjoint and dt < 1
    assert report(2, ok, f"mu = {got} (expected {want}), {dt:.3f}s"), got


def test_3_two_point_area(report):
    s = sc.builtin("two-point-area")
    K1, K2 = s.sets["K1"], s.sets["K2"]
    nu = lambda A: eval_ssf(s.ssf, s.model, A)
    vals = (nu(K1), nu(K2), nu(K1 | K2))
    ok = vals == (1, 1, 32) and vals[0] + vals[1] < vals[2] and in_family(s.model, K1 | K2, "K_s")
    assert report(3, ok, f"nu(K1) + nu(K2) = {vals[0]} + {vals[1]} < nu(K1 u K2) = {vals[2]}"), vals


def test_4_multi_point(report):
    s = sc.builtin("multi-point")
    rep = run_suite("tm-axioms", s.model, s.ssf, seed=0, budget=500)
    total = mu(s.ssf, s.model, s.model.X)
    sup = total_sup(s.ssf, s.model, generate_solid_catalog(s.model, 0, 100))
    ok = rep.passed and total == 1 == sup
    assert report(4, ok, f"tm-axioms {rep.cases_run} cases passed={rep.passed}, mu(X) = {total}, sup = {sup}")


def test_5_area_threshold(report):
    s = sc.builtin("area-threshold")
    block = s.sets["block"]
    pieces = [v for k, v in s.sets.items() if k != "block"]
    big = mu(s.ssf, s.model, block)
    small = [mu(s.ssf, s.model, p) for p in pieces]
    covered = frozenset().union(*pieces) >= block
    ok = big == 16 and len(pieces) == 9 and all(v == 0 for v in small) and covered
    assert report(5, ok, f"mu(block) = {big}, nine cover pieces mu = {small}")


def tiny_builtins(m):
    vs = canonical(m.vertices)
    out = [make_builtin("pointCounting", m, points=vs), make_builtin("areaThreshold", m, threshold=1)]
    if len(vs) >= 2:
        out.append(make_builtin("twoPointArea", m, points=vs[:2]))
        line = [v for v in vs if v[1] == vs[-1][1] and v != vs[0]]
        if line and vs[0][1] != vs[-1][1]:
            out.append(make_builtin("pointLine", m, point=vs[0], line=line))
        out.append(make_builtin("boundaryContainment", m, boundary=vs[1:]))
    if len(vs) >= 3:
        out.append(make_builtin("multiPointFraction", m, n=1, points=vs[:3]))
    return out


def test_6_oracle_equivalence(report):
    t = time.perf_counter()
    n = bad = 0
    for m in M.tiny_models():
        opens = list(open_sets(m))
        for f in tiny_builtins(m):
            for U in opens:
                n += 1
                bad += mu(f, m, U) != mu_oracle(f, m, U)
    dt = time.perf_counter() - t
    ok = bad == 0 and dt < 60
    assert report(6, ok, f"{n} (model, builtin, open) cases, {bad} mismatches, {dt:.1f}s")


def shipped_pairings():
    out = []
    for m in (M.plane(), M.half_plane(), M.punctured_square()):
        pts = [p for p in [(4, 4), (6, 4), (8, 8)] if p in m.X]
        out += [
            (m, make_builtin("pointCounting", m, points=pts[:2])),
            (m, make_builtin("pointLine", m, point=(6, 8), line=M.row(m, 4))),
            (m, make_builtin("twoPointArea", m, points=pts[:2])),
            (m, make_builtin("areaThreshold", m, threshold=5)),
            (m, make_builtin("multiPointFraction", m, n=1, points=pts[:3])),
        ]
    for name in sc.BUILTIN:
        s = sc.builtin(name)
        out.append((s.model, s.ssf))
    return out


def test_7_master_lemma(report):
    worst, fails, runs = None, 0, 0
    for m, f in shipped_pairings():
        rep = run_suite("extension-consistency", m, f, seed=11, budget=500)
        pairs = rep.notes["deep-pairs"]
        fails += sum(1 for x in rep.failures if x["case"][0] == "master")
        runs += 1
        worst = pairs if worst is None else min(worst, pairs)
    ok = fails == 0 and worst >= 500
    assert report(7, ok, f"{runs} model/builtin pairings, min {worst} pairs each, {fails} failures")


def test_8_restriction_round_trip(report):
    m = build_model(3, 3, infinity=M.frame(3, 3), name="plane-3")
    vs = canonical(m.vertices)
    fs = [make_builtin("twoPointArea", m, points=[vs[0], vs[3]]),
          make_builtin("pointLine", m, point=vs[3], line=[vs[0], vs[1]]),
          make_builtin("areaThreshold", m, threshold=2)]
    reps = [restriction_roundtrip(m, f) for f in fs]
    ok = all(r.passed for r in reps)
    detail = ", ".join(f"{r.suite} {r.cases_run} cases {'ok' if r.passed else 'FAILED'}" for r in reps)
    assert report(8, ok, detail)


def test_9_structural_suites(report):
    lines, ok = [], True
    for name, m in M.shipped_models().items():
        for suite in ("topology-basics", "hull-props"):
            rep = run_suite(suite, m, None, seed=9, budget=1000)
            counts = rep.notes.get("cases", {})
            kinds = ({"hull-idempotent", "hull-monotone", "trichotomy", "decomposition", "holes-solid"}
                     if suite == "hull-props" else {"sandwich", "components"})
            enough = all(counts.get(k, 0) >= 1000 for k in kinds)
            ok &= rep.passed and enough and rep.elapsed < 60
            lines.append(f"{name}/{suite} {rep.cases_run} cases {rep.elapsed:.1f}s")
    assert report(9, ok, "; ".join(lines))


def test_10_partition_genus(report):
    s = sc.builtin("strip-with-hole")
    parts = [s.sets[k] for k in ("P1", "P2", "P3")]
    explicit = verify_solid_partition(s.model, s.sets["A"], parts) and len(parts) == 3
    found = 0
    rng = random.Random(0)
    for m in (M.plane(), M.half_plane(), M.punctured_square()):
        for A in generate_solid_catalog(m, 0, 100):
            found += len(search_solid_partitions(m, A, rng, 20))
    ok = explicit and found == 0
    assert report(10, ok, f"strip partition valid={explicit}; genus-0 search found {found} "
                          "nontrivial partitions within budget (evidence, not proof)")
