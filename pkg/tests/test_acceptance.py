"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -s -v`` to see the lines.
"""

import random
import time
from collections import Counter

import pytest

from knotsym import (
    ALPHA,
    DELTA,
    EMPTY,
    Cycle,
    MainArc,
    all_cycles,
    all_moves,
    apply_beta,
    apply_omega1_minus,
    apply_omega1_plus,
    apply_omega2_minus,
    apply_omega2_plus,
    apply_omega3,
    compare_with_oracle,
    crossing_number,
    cycle,
    find_three_gons,
    inverse_shift,
    one_gon_at,
    parse_symbol,
    reduced_set,
    room_sense,
    three_gon_at,
    turn,
    two_gon_at,
)
from knotsym.corpus import (
    FIGURE_EIGHT,
    FIGURE_EIGHT_GAUSS,
    LEFT_TREFOIL,
    NINE_CROSSING,
    THREE_LOOPS,
    TREFOIL,
    random_walk,
)
from knotsym.formats import from_gauss

P = parse_symbol
RIGHT_R = {P("(1,4)+ (5,2)+ (3,6)+"), P("(4,1)+ (2,5)+ (6,3)+")}
LEFT_R = {P("(1,4)- (5,2)- (3,6)-"), P("(4,1)- (2,5)- (6,3)-")}


@pytest.fixture
def report(capsys):
    def emit(number, title, ok, detail=""):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}" + (f" ({detail})" if detail else ""))
    return emit


def arcs(text):
    return [MainArc(int(t[:-1]), 1 if t[-1] == "+" else -1) for t in text.split()]


def test_1_trefoil_invariants(report):
    t0 = time.perf_counter()
    right = reduced_set(TREFOIL).as_set()
    left = reduced_set(LEFT_TREFOIL).as_set()
    elapsed = time.perf_counter() - t0
    ok = right == RIGHT_R and left == LEFT_R and not right & left and elapsed < 1
    report(1, "trefoil reduced sets exact and disjoint from the mirror", ok, f"{elapsed:.3f}s")
    assert right == RIGHT_R and left == LEFT_R
    assert not right & left
    assert elapsed < 1


def test_2_unknot_collapse(report):
    t0 = time.perf_counter()
    seeds = [EMPTY, P("(1,2)+"), P("(1,2)-"), P("(4,1)+ (3,2)-")]
    results = [(reduced_set(s).as_set(), crossing_number(s)) for s in seeds]
    elapsed = time.perf_counter() - t0
    ok = all(r == {EMPTY} and n == 0 for r, n in results) and elapsed < 1
    report(2, "unknot diagrams collapse to the empty symbol", ok, f"{elapsed:.3f}s")
    assert all(r == {EMPTY} and n == 0 for r, n in results)
    assert elapsed < 1


def test_3_cycle_golden(report):
    delta = cycle(THREE_LOOPS, MainArc(2), DELTA)
    alpha = cycle(THREE_LOOPS, MainArc(2), ALPHA)
    nine = cycle(NINE_CROSSING, MainArc(15), DELTA)
    ok = (list(delta.arcs) == arcs("2+ 4+ 6+")
          and list(alpha.arcs) == arcs("2+ 3- 4+ 5- 6+ 1-")
          and list(nine.arcs) == arcs("15+ 11+ 3+ 13+ 5+"))
    report(3, "golden cycles reproduced", ok)
    assert list(delta.arcs) == arcs("2+ 4+ 6+")
    assert list(alpha.arcs) == arcs("2+ 3- 4+ 5- 6+ 1-")
    assert list(nine.arcs) == arcs("15+ 11+ 3+ 13+ 5+")


def _round_trip(rng, s):
    """One random move and its undo; returns (kind, restored) or None if the
    drawn Ω2 room or Ω3 triangle does not exist."""
    kind = rng.choice(["r1", "r2", "beta", "r3"])
    theta, phi = rng.choice((1, -1)), rng.choice((ALPHA, DELTA))
    labels = list(s.labels)
    if kind == "r1":
        a = rng.choice(labels) if s else 0
        t = apply_omega1_plus(s, a, theta, phi)
        back = apply_omega1_minus(t, one_gon_at(t, a + 1))
    elif kind == "r2":
        if s:
            a, b = sorted((rng.choice(labels), rng.choice(labels)))
            if room_sense(s, a, b, phi) is None:
                return None
        else:
            a = b = 0
        t = apply_omega2_plus(s, a, b, theta, phi)
        back = apply_omega2_minus(t, two_gon_at(t, a + 1, b + 3))
    elif kind == "beta":
        if not s:
            return None
        a = rng.choice(labels)
        back = apply_beta(apply_beta(s, a), inverse_shift(s, a))
    else:
        gons = find_three_gons(s) if s else []
        if not gons:
            return None
        gon = rng.choice(gons)
        t = apply_omega3(s, gon)
        back = apply_omega3(t, three_gon_at(t, *gon.arcs))
    return kind, back == s


def test_4_round_trips(report):
    rng = random.Random(2024)
    t0 = time.perf_counter()
    done, failures = Counter(), []
    while sum(done.values()) < 1200:
        start = rng.choice((EMPTY, TREFOIL))
        s = random_walk(rng, start, rng.randint(0, 6), max_order=6)
        got = _round_trip(rng, s)
        if got is None:
            continue
        kind, ok = got
        done[kind] += 1
        if not ok:
            failures.append((str(s), kind))
    elapsed = time.perf_counter() - t0
    ok = not failures and elapsed < 30
    report(4, "positive/negative, shift and triangle round trips", ok,
           f"{sum(done.values())} trials {dict(done)}, {len(failures)} failures, {elapsed:.1f}s")
    assert not failures, failures[:5]
    assert min(done.values()) > 100
    assert elapsed < 30


def _axiom_failures(s):
    bad = []
    cycles = all_cycles(s)
    for phi in (ALPHA, DELTA):
        owners = Counter(e for c in cycles if c.orientation == phi for e in c)
        if set(owners) != set(s.main_arcs()) or set(owners.values()) != {1}:
            bad.append("two cycles per arc")
        for f in s.main_arcs():
            g = turn(s, f, phi)
            if turn(s, -g, -phi) != -f:
                bad.append("turn reversal")
            c = cycle(s, f, phi)
            if -f in c:
                bad.append("-f in its own cycle")
            if any(-e in c for e in c):
                bad.append("e and -e together")
            if cycle(s, -f, -phi) != Cycle([-e for e in reversed(c.arcs)], -phi):
                bad.append("reversal formula")
    return bad


def test_5_cycle_axioms(report, corpus):
    failures = [(str(s), why) for s in corpus if s for why in _axiom_failures(s)]
    report(5, "cycle axioms on the corpus", not failures, f"{len(corpus)} symbols, {len(failures)} failures")
    assert not failures, failures[:5]


def test_6_reduced_set_invariance(report, corpus):
    t0 = time.perf_counter()
    cache = {}

    def r(x):
        if x not in cache:
            cache[x] = reduced_set(x).as_set()
        return cache[x]

    checked, failures = 0, []
    for s in corpus:
        if s.order > 6:
            continue
        for name, t in all_moves(s):
            checked += 1
            if r(t) != r(s):
                failures.append((str(s), name))
    elapsed = time.perf_counter() - t0
    ok = not failures and elapsed < 120
    report(6, "reduced set unchanged by every move", ok,
           f"{checked} moves, {len(failures)} failures, {elapsed:.1f}s")
    assert not failures, failures[:5]
    assert elapsed < 120


def test_7_oracle_equivalence(report):
    t0 = time.perf_counter()
    reports = [compare_with_oracle(s, 4) for s in (EMPTY, P("(1,2)+"), TREFOIL)]
    elapsed = time.perf_counter() - t0
    ok = all(x.agrees for x in reports) and elapsed < 300
    report(7, "oracle minimum stratum equals the reduced set at cap 4", ok,
           "; ".join(x.summary() for x in reports) + f"; {elapsed:.1f}s")
    assert all(x.agrees for x in reports)
    assert elapsed < 300


def test_8_figure_eight(report, capsys):
    f8 = from_gauss(FIGURE_EIGHT_GAUSS)
    r = reduced_set(f8).as_set()
    n = crossing_number(f8)
    oracle = compare_with_oracle(f8, 5)
    ok = (f8 == FIGURE_EIGHT and n == 4 and not r & RIGHT_R and not r & LEFT_R
          and min(x.order for x in oracle.stratum) == 4
          and not oracle.stratum & (RIGHT_R | LEFT_R))
    report(8, "figure-eight has crossing number 4, distinct from both trefoils", ok,
           f"{len(r)} reduced symbols; oracle {oracle.summary()}")
    if not oracle.agrees:
        # documented limitation: the missing diagrams are the reversed knot's
        with capsys.disabled():
            print(f"    note: oracle finds {len(oracle.missing)} minimal diagrams outside the reduced set, "
                  f"e.g. {min(oracle.missing)}; they form the reduced set of the reversed diagram")
    assert f8 == FIGURE_EIGHT
    assert n == 4
    assert not r & RIGHT_R and not r & LEFT_R
    assert {x.order for x in oracle.stratum} == {4}
    assert not oracle.stratum & (RIGHT_R | LEFT_R)
    assert oracle.missing == reduced_set(min(oracle.missing)).as_set()
