"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run directly (``python3 tests/test_acceptance.py``) or under pytest, where the
lines are also collected into the terminal summary.
"""

import itertools
import math
import random
import sys
import time
from fractions import Fraction
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).parent))

from conftest import ACCEPTANCE_LINES, random_ncpoly  # noqa: E402

from qgk.duality import annihilation_residual, calibrate, candidate_table, pair  # noqa: E402
from qgk.frt import (  # noqa: E402
    antipode_residual_numeric,
    centrality_check,
    frt_relations,
    hopf_axiom_check,
    same_span,
    sl_quotient,
    sl_relation_table,
)
from qgk.moyal import quantization_check, random_symbol  # noqa: E402
from qgk.rewrite import (  # noqa: E402
    Reducer,
    graded_dimension,
    local_confluence,
    normal_words,
    quantum_exterior,
    quantum_plane,
)
from qgk.rmatrix import qybe_check, standard_sln_rmatrix  # noqa: E402
from qgk.scalar import Q  # noqa: E402
from qgk.twist import (  # noqa: E402
    cocycle_check,
    load_scenario,
    twisted_coproduct,
    twisted_r_and_antipode,
)
from qgk.uqnum import coproduct_check, fundamental_rep, random_points, uq_report  # noqa: E402

SEED = 20240611


def record(number: int, title: str, ok: bool, detail: str = ""):
    line = f"[{'PASS' if ok else 'FAIL'}] AC{number:>2} {title}" + (f" :: {detail}" if detail else "")
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def test_ac01_symbolic_qybe():
    t0 = time.perf_counter()
    holds = all(qybe_check(standard_sln_rmatrix(N)).holds for N in (2, 3))
    runtime = time.perf_counter() - t0
    flipped, total = 0, 0
    for N in (2, 3):
        R = standard_sln_rmatrix(N)
        for r in range(R.size):
            for c in range(R.size):
                mutants = [R.with_entry(r, c, R[r, c] + Q**2)]
                if R[r, c]:
                    mutants.append(R.with_entry(r, c, R[r, c] * Q))
                for M in mutants:
                    total += 1
                    flipped += not qybe_check(M).holds
    ok = holds and runtime <= 60 and flipped == total
    record(1, "symbolic QYBE exact for N=2,3; every single-entry mutation detected", ok,
           f"runtime {runtime:.3f}s, mutations flipped {flipped}/{total}")


def test_ac02_r_at_one():
    ok = True
    for N in (2, 3, 4):
        M = standard_sln_rmatrix(N).at_one()
        ident = np.array([[Fraction(int(i == j)) for j in range(N * N)] for i in range(N * N)], dtype=object)
        ok &= bool((M == ident).all())
    record(2, "R(1) is the identity in exact rational arithmetic, N<=4", ok)


def test_ac03_relation_table_span():
    ok = all(same_span(frt_relations(standard_sln_rmatrix(N)), sl_relation_table(N).relations()) for N in (2, 3))
    record(3, "span(FRT relations) = span(oriented table rules) over Q(q), N=2,3", ok)


def test_ac04_flatness():
    bad = []
    for N in (2, 3):
        P = sl_relation_table(N)
        for d in range(5):
            if graded_dimension(P, d) != math.comb(N * N + d - 1, d):
                bad.append(("A(R)", N, d))
    for n in range(1, 5):
        for d in range(6):
            if graded_dimension(quantum_plane(n), d) != math.comb(n + d - 1, d):
                bad.append(("plane", n, d))
            if graded_dimension(quantum_exterior(n), d) != math.comb(n, d):
                bad.append(("exterior", n, d))
    record(4, "graded dimensions equal classical counts (A(R) d<=4; plane/exterior d<=5, n<=4)", not bad,
           f"mismatches {bad}" if bad else "")


def test_ac05_sl2_basis():
    P = sl_quotient(2).pres
    G = P.gens
    b, c = G.index("t12"), G.index("t21")
    ok = True
    counts = []
    for d in range(5):
        expected = set()
        for e in itertools.product(range(d + 1), repeat=4):
            if sum(e) == d and e[b] * e[c] == 0:
                expected.add(tuple(x for x in range(4) for _ in range(e[x])))
        got = set(normal_words(P, d))
        counts.append(len(got))
        ok &= got == expected
    record(5, "SL_q(2) normal monomials = ordered monomials with m_1^2 * m_2^1 = 0, degree<=4", ok,
           f"counts per degree {counts}")


def test_ac06_centrality_and_hopf():
    central = centrality_check(2) and centrality_check(3)
    exact2 = hopf_axiom_check(sl_quotient(2))
    exact3 = hopf_axiom_check(sl_quotient(3))
    alg3 = sl_quotient(3)
    pts = random_points(np.random.default_rng(SEED), 5)
    worst = max(antipode_residual_numeric(alg3, z) for z in pts)
    ok = central and exact2["all"] and exact3["coassociativity"] and exact3["counit"] and worst <= 1e-10
    record(6, "det_q central (N=2,3); Hopf axioms exact N=2, antipode numeric N=3", ok,
           f"N=3 antipode residual {worst:.2e} at 5 z; N=3 exact antipode {exact3['antipode_left'] and exact3['antipode_right']}")


def test_ac07_uq_relations():
    pts = random_points(np.random.default_rng(SEED), 20)
    worst = 0.0
    for N in (1, 2, 3):
        for z in pts:
            worst = max(worst, max(uq_report(fundamental_rep(N, z)).values()))
    limit = max(max(uq_report(fundamental_rep(N, 0)).values()) for N in (1, 2, 3))
    ok = worst <= 1e-10 and limit <= 1e-10
    record(7, "U_q seven relation groups at 20 random z, N=1,2,3; z->0 classical limit", ok,
           f"max residual {worst:.2e}, limit {limit:.2e}")


def test_ac08_uq_coproduct():
    pts = random_points(np.random.default_rng(SEED + 1), 5)
    alg, anti = 0.0, 0.0
    for N in (1, 2):
        for z in pts:
            rep = coproduct_check(fundamental_rep(N, z))
            alg = max(alg, rep["algebra_map"])
            anti = max(anti, rep["antipode"])
    record(8, "U_q coproduct algebra map and antipode axiom, N=1,2, 5 random z", alg <= 1e-10 and anti <= 1e-10,
           f"algebra map {alg:.2e}, antipode {anti:.2e}")


def test_ac09_duality():
    rows = candidate_table(2, 0.7)
    survivors = [r for r in rows if r["annihilation"] <= 1e-8 and r["coproduct"] <= 1e-8]
    ctx = calibrate(2, 0.7)
    worst_rel, worst_det = 0.0, 0.0
    choices = set()
    for N in (2, 3):
        for z in random_points(np.random.default_rng(SEED + N), 5):
            c = calibrate(N, z)
            choices.add((c.scale, c.convention))
            worst_rel = max(worst_rel, annihilation_residual(c, 4))
            for u in c.monomials(4):
                eps = 0.0 if u else 1.0
                worst_det = max(worst_det, abs(pair(c.frt.detq, u, c) - eps))
    ok = len(survivors) == 1 and len(choices) == 1 and worst_rel <= 1e-8 and worst_det <= 1e-8
    record(9, "duality: unique calibration; relations annihilate length<=4 (N=2,3, 5 z each); <det_q,u> = eps(u)", ok,
           f"calibrated q = {ctx.scale} ({ctx.convention}); annihilation {worst_rel:.2e}; det {worst_det:.2e}")


def test_ac10_twist():
    ident = load_scenario("identity")
    ident_res = max(cocycle_check(ident).values())
    ident_res = max(
        [ident_res]
        + [float(np.max(np.abs(twisted_coproduct(ident, g) - ident.delta_images[g]))) for g in ident.rep_images]
        + [float(np.max(np.abs(twisted_r_and_antipode(ident)["R"] - np.eye(4))))]
    )
    t = load_scenario("sl3_abelian")
    coc = cocycle_check(t)
    out = twisted_r_and_antipode(t)["report"]
    inter = max(out["intertwining"].values())
    ok = ident_res == 0 and max(coc.values()) <= 1e-10 and out["triangularity"] <= 1e-10 and inter <= 1e-10
    record(10, "twist: identity exact; abelian cocycle/counit, R21 R = 1, intertwining per generator", ok,
           f"identity {ident_res}, cocycle {coc['cocycle']:.2e}, counit {coc['counit']:.2e}, "
           f"R21R {out['triangularity']:.2e}, intertwining {inter:.2e}")


def test_ac11_moyal():
    rng = random.Random(SEED)
    assoc = 0
    for _ in range(50):
        n = rng.randint(1, 2)
        a, b, c = (random_symbol(rng, n, 4) for _ in range(3))
        assoc += quantization_check(a, b, c)["associative"]
    comm = 0
    for _ in range(20):
        n = rng.randint(1, 2)
        a, b = random_symbol(rng, n, 4), random_symbol(rng, n, 4)
        comm += quantization_check(a, b)["commutator_h1_matches"]
    record(11, "Moyal: exact associativity (50 triples); hbar^1 commutator = -i{a,b} (20 pairs)",
           assoc == 50 and comm == 20, f"associative {assoc}/50, bracket {comm}/20")


def test_ac12_confluence():
    presets = {"quantum_plane(3)": quantum_plane(3), "quantum_exterior(3)": quantum_exterior(3),
               "SL_q(2)": sl_quotient(2).pres}
    empty = {name: not local_confluence(P, 3) for name, P in presets.items()}
    rng = random.Random(SEED)
    agree = 0
    for P in presets.values():
        red = Reducer(P)
        for _ in range(100):
            a = random_ncpoly(rng, P.gens, 1 + rng.randint(0, 1))
            b = random_ncpoly(rng, P.gens, 1)
            agree += red(a * b) == red(red(a) * red(b))
    ok = all(empty.values()) and agree == 300
    record(12, "local confluence to degree 3 (plane, exterior, SL_q(2)); reduce(ab) = reduce(red(a) red(b))", ok,
           f"confluent {empty}, product checks {agree}/300")


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_ac") and callable(fn):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
