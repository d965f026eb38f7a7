"""Acceptance criteria, one test per criterion.

Each test records a single ``criterion N: PASS|FAIL|SKIP`` line (with the
sub-checks that decided it); the lines are printed in the pytest terminal
summary and when this file is run as a script.  Comparisons are exact.
"""

import json
import os
import time
from fractions import Fraction as F
from pathlib import Path

import pytest

from helpers import delaunay_volume_moment, random_unimodular, rng
from toricstab import catalog
from toricstab.exact import format_vector
from toricstab.formats import parse_polytope, serialize_polytope
from toricstab.lattice import count_and_sum, ehrhart_polynomial, lattice_sum_polynomial, reciprocity_check
from toricstab.polytope import DUAL, HalfspaceRep, Polytope, is_reflexive, is_smooth_fano, unimodular_image
from toricstab.report import analyze, scan
from toricstab.roots import demazure_roots, is_reductive, nill_pairing_criterion, rays
from toricstab.stability import (
    PiecewiseLinearFunction as PL,
    ChowData,
    chow_condition_asymptotic,
    delta_invariant,
    ding_invariant,
    facet_selector,
    greatest_ricci_lower_bound,
    theorem_chain,
)

RESULTS = {}
RANDOM_IMAGES = 100
JENSEN_SAMPLES = 200
DB_ENV = "TORICSTAB_REFLEXIVE3_DB"


def record(n, checks):
    """``checks`` is a list of ``(description, ok)``; store and return the verdict."""
    ok = all(c for _, c in checks)
    detail = "; ".join(f"{d} [{'ok' if c else 'MISMATCH'}]" for d, c in checks)
    line = f"criterion {n:2}: {'PASS' if ok else 'FAIL'}  {detail}"
    RESULTS[n] = line
    print(line)
    return ok


def record_skip(n, why):
    RESULTS[n] = f"criterion {n:2}: SKIP  {why}"
    print(RESULTS[n])


def fmt(x):
    return format_vector(x) if isinstance(x, tuple) else str(x)


def moment_from_normals(normals):
    return Polytope.from_facets(HalfspaceRep(normals, (1,) * len(normals)), DUAL)


# ---------------------------------------------------------------------------


def test_criterion_01_blowup_example():
    t0 = time.perf_counter()
    d = moment_from_normals([(1, 0), (1, 1), (0, 1), (-1, -1)])
    b = d.barycenter()
    r = greatest_ricci_lower_bound(d)
    delta = delta_invariant(d.facets, b)
    elapsed = time.perf_counter() - t0
    ok = record(1, [
        (f"b = {fmt(b)}", b == (F(1, 12), F(1, 12))),
        (f"Q = {fmt(r.q_point)}", r.q_point == (F(-1, 2), F(-1, 2))),
        (f"delta = {delta}", delta == F(6, 7)),
        (f"R = {r.value}", r.value == F(6, 7)),
        (f"time {elapsed:.3f}s < 0.1s", elapsed < 0.1),
    ])
    assert ok


def test_criterion_02_e4_example():
    t0 = time.perf_counter()
    # the printed normals alone bound no polytope; the fan is completed by
    # (0,-1,0) and (0,0,-1) as recorded in the catalog
    d = catalog.entry("E4").moment_polytope()
    b = d.barycenter()
    m = d.moment()
    r = greatest_ricci_lower_bound(d)
    delta = delta_invariant(d.facets, b)
    on_f2 = [d.facets.normals[i] for i in facet_selector(d)] == [(0, 1, 0)]
    raw_delta = delta_invariant(d.facets, m)
    elapsed = time.perf_counter() - t0
    want_b = (F(5, 24), F(7, 8), F(5, 12))
    ok = record(2, [
        (f"b = {fmt(b)} vs printed {fmt(want_b)}", b == want_b),
        (f"integral of x = {fmt(m)} equals the printed b", m == want_b),
        (f"Q = {fmt(r.q_point)}", r.q_point == (F(-5, 21), -1, F(-10, 21))),
        (f"delta = {delta} vs 8/15", delta == F(8, 15)),
        (f"delta with the unnormalized integral = {raw_delta}", raw_delta == F(8, 15)),
        (f"delta = R = {r.value}", delta == r.value),
        ("Q on the facet with normal (0,1,0)", on_f2),
        (f"time {elapsed:.3f}s < 1s", elapsed < 1),
    ])
    assert ok


def test_criterion_03_f2():
    t0 = time.perf_counter()
    p = Polytope(catalog.entry("F2").fan_vertices)
    rs = demazure_roots(rays(p))
    published = (F(0), F(0), F(1, 4))
    vol, raw = delaunay_volume_moment(p.vertices)
    normalized = tuple(a / vol for a in raw)
    convention = "unnormalized integral" if raw == published else "normalized barycenter" if normalized == published else None
    lib = p.moment() if convention == "unnormalized integral" else p.barycenter()
    elapsed = time.perf_counter() - t0
    ok = record(3, [
        (f"roots = {[fmt(m) for m in rs.roots]}", rs.roots == ((-1, 0, 0), (1, 0, 0))),
        ("all semisimple", rs.semisimple == rs.roots),
        ("reductive", is_reductive(rs)),
        ("Nill pairing with (0,0,1/4) vanishes", nill_pairing_criterion(published, rs)),
        (f"oracle selects convention: {convention}", convention is not None),
        (f"library value under that convention = {fmt(lib)}", lib == published),
        (f"time {elapsed:.3f}s < 1s", elapsed < 1),
    ])
    assert ok


def test_criterion_04_table_rows():
    res = [r for r in catalog.verify_builtin()]
    by = {(r.entry, r.key): r for r in res}
    e4_roots = by[("E4", "roots")]
    e4_delta = by[("E4", "delta")]
    f2_delta = by[("F2", "delta")]
    f2_red = by[("F2", "reductive")]
    skipped = {r.entry for r in res if r.status == "skipped"}
    want_skipped = {row.name for row in catalog.TABLE_ROWS} - catalog.TABLE_ROWS_WITH_DATA
    ok = record(4, [
        ("E4 roots {(+-1,0,0),(0,1,0)}", e4_roots.status == "pass"),
        ("E4 non-reductive", by[("E4", "reductive")].status == "pass"),
        (f"E4 delta = R = {e4_delta.computed} vs 8/15 ({e4_delta.status}: {e4_delta.note})",
         e4_delta.status == "pass"),
        ("F2 reductive", f2_red.status == "pass"),
        (f"F2 delta = R recomputed {f2_delta.computed} vs 6/11, {f2_delta.status}: {f2_delta.note}",
         f2_delta.status in ("pass", "flagged")),
        (f"{len(want_skipped)} other rows skipped: external data required", skipped == want_skipped),
    ])
    assert ok


def test_criterion_05_reciprocity():
    checks = []
    for e in catalog.reflexive_entries():
        d = e.moment_polytope()
        r = reciprocity_check(d)
        n = d.dim
        checks.append((f"{e.name}: E(-1) = {r.ehrhart_at_minus_one}, s(-1) = {fmt(r.sum_at_minus_one)}, "
                       f"phi in {{1,x}} k=1,2",
                       r.ehrhart_at_minus_one == (-1) ** n and all(a == 0 for a in r.sum_at_minus_one) and r.ok))
    assert {len(e.fan_vertices[0]) for e in catalog.reflexive_entries()} == {2, 3}
    assert record(5, checks)


def _images(count, seed, pool):
    r = rng(seed)
    out = []
    while len(out) < count:
        e = pool[len(out) % len(pool)]
        p = e.fan_polytope()
        out.append((e.name, unimodular_image(p, random_unimodular(p.dim, r)).dual()))
    return out


def test_criterion_06_theorem_chain():
    pool = catalog.entries()
    targets = [(e.name, e.moment_polytope()) for e in pool] + _images(RANDOM_IMAGES, 6, pool)
    bad = []
    for name, d in targets:
        rep = theorem_chain(d)
        if not rep.holds:
            bad.append(name)
    ok = record(6, [
        (f"{len(pool)} built-ins + {RANDOM_IMAGES} GL(n,Z) images: implication and i=-1 proof route",
         not bad),
    ])
    assert ok, bad


def test_criterion_07_delta_equals_r():
    pool = [e for e in catalog.entries() if is_smooth_fano(e.fan_polytope())]
    targets = [(e.name, e.moment_polytope()) for e in pool] + _images(RANDOM_IMAGES, 7, pool)
    bad = [name for name, d in targets
           if delta_invariant(d.facets, d.barycenter()) != greatest_ricci_lower_bound(d).value]
    ok = record(7, [(f"{len(pool)} smooth built-ins + {RANDOM_IMAGES} unimodular images", not bad)])
    assert ok, bad


def test_criterion_08_chow_negative_control():
    d = catalog.entry("Bl1P2").moment_polytope()
    lhs, rhs = ChowData.of(d).sides(1)
    pts = [x for x in __import__("itertools").product(range(-1, 3), repeat=2)
           if all(sum(a * b for a, b in zip(x, v)) + c >= 0 for v, c in d.facets)]
    brute_sum = tuple(sum(x[j] for x in pts) for j in range(2))
    brute_rhs = tuple(len(pts) * a for a in d.barycenter())
    ok = record(8, [
        (f"s(1) = {fmt(lhs)}, enumeration {fmt(brute_sum)}", lhs == brute_sum == (1, 1)),
        (f"E(1)*b = {fmt(rhs)}, enumeration {len(pts)}*b = {fmt(brute_rhs)}", rhs == brute_rhs == (F(3, 4), F(3, 4))),
        ("condition fails at i = 1", lhs != rhs),
    ])
    assert ok


def _random_pl(r, n):
    q = lambda: F(r.randint(-6, 6), r.randint(1, 3))  # noqa: E731
    return PL(tuple((tuple(q() for _ in range(n)), q()) for _ in range(r.randint(1, 5))))


def test_criterion_09_ding():
    box = Polytope([(1, 1), (1, -1), (-1, 1), (-1, -1)], DUAL)
    v = ding_invariant(box, PL((((0, 0), 0), ((1, 0), 0))))
    affine_ok = True
    for e in catalog.entries():
        d = e.moment_polytope()
        a = tuple(F(i + 1, 3) for i in range(d.dim))
        if ding_invariant(d, PL.affine(a, 5)) != sum(x * y for x, y in zip(a, d.barycenter())):
            affine_ok = False
    balanced = [e.moment_polytope() for e in catalog.entries()
                if all(a == 0 for a in e.moment_polytope().barycenter())]
    r = rng(9)
    worst = None
    for i in range(JENSEN_SAMPLES):
        d = balanced[i % len(balanced)]
        val = ding_invariant(d, _random_pl(r, d.dim).normalized())
        worst = val if worst is None else min(worst, val)
    ok = record(9, [
        (f"I(box, max(0,x1)) = {v}", v == F(1, 4)),
        ("I(Delta, affine) = <a, b> on every built-in", affine_ok),
        (f"Jensen: min over {JENSEN_SAMPLES} random u = {worst}", worst >= 0),
    ])
    assert ok


def test_criterion_10_held_out():
    checks = []
    for e in catalog.entries():
        d = e.moment_polytope()
        n = d.dim
        eh, s = ehrhart_polynomial(d), lattice_sum_polynomial(d)
        good = all((eh(k), s(k)) == count_and_sum(d, k) for k in (n + 1, n + 2))
        checks.append((e.name, good))
    assert record(10, [(f"dilations n+1, n+2 on {', '.join(c for c, _ in checks)}", all(g for _, g in checks))])


def test_criterion_11_database_scale():
    path = os.environ.get(DB_ENV)
    if not path or not Path(path).is_file():
        record_skip(11, f"database file not supplied (set {DB_ENV})")
        pytest.skip("external reflexive-polytope database not supplied")
    t0 = time.perf_counter()
    res = scan(path, jobs=8, chow=False)
    elapsed = time.perf_counter() - t0
    c = res["counts"]
    ok = record(11, [
        (f"{c['entries']} entries", c["entries"] == 4319),
        (f"K-polystable count {c['k_polystable']}", c["k_polystable"] == 32),
        (f"time {elapsed:.1f}s < 60s", elapsed < 60),
    ])
    assert ok


def test_criterion_12_determinism_round_trip():
    outs = [json.dumps(analyze(catalog.entry("E4").fan_polytope()).to_dict(), indent=2) for _ in range(2)]
    rt = all(parse_polytope(serialize_polytope(p), p.lattice_tag) == p
             for e in catalog.entries() for p in (e.fan_polytope(), e.moment_polytope()))
    ok = record(12, [("byte-identical JSON across runs", outs[0] == outs[1]),
                     ("parse(serialize(p)) = p on the catalog", rt)])
    assert ok


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
