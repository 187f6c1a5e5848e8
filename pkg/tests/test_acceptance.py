"""Acceptance criteria 1-10, one PASS/FAIL line each.

Run under pytest (lines appear in the terminal summary) or directly with
``python3 tests/test_acceptance.py``.
"""
import sys
import time

import pytest

from clusterframe import io
from clusterframe.cluster import build_exchange_graph, initial_seed, mutate_path, seed_equivalent
from clusterframe.coxeter import CoxeterElement, CoxeterGroup, all_coxeter_elements
from clusterframe.framework import (AmplenessViolation, all_rank_two_traces, cambrian_framework,
                                    corrupt_label, cross_checks, seed_map, verify_all, verify_fan,
                                    verify_exchange_isomorphism)
from clusterframe.presets import CLUSTERS, FINITE, INFINITE, POSITIVE_ROOTS
from clusterframe.sortable import enumerate_sortables, pi_down, pi_down_bruteforce

TIME_LIMIT = 60.0


def finite_runs():
    for name in sorted(FINITE):
        for M, c in all_coxeter_elements(FINITE[name]):
            yield name, M, c, cambrian_framework(c, POSITIVE_ROOTS[name])


def order_name(c):
    return "".join(f"s{i + 1}" for i in c.order)


# -------------------------------------------------------------- criteria

B2_GOLDEN = {
    # vertex: [(label, co-label) at port 1, at port 2]
    "e": [("a1", "a1v"), ("a2", "a2v")],
    "s1": [("-a1", "-a1v"), ("2a1+a2", "a1v+a2v")],
    "s2": [("a1", "a1v"), ("-a2", "-a2v")],
    "s1s2": [("a1+a2", "a1v+2a2v"), ("-2a1-a2", "-a1v-a2v")],
    "s1s2s1": [("-a1-a2", "-a1v-2a2v"), ("a2", "a2v")],
    "s1s2s1s2": [("-a1", "-a1v"), ("-a2", "-a2v")],
}
B2_EDGES = {
    frozenset({("e", "a1"), ("s1", "-a1")}),
    frozenset({("e", "a2"), ("s2", "-a2")}),
    frozenset({("s1", "2a1+a2"), ("s1s2", "-2a1-a2")}),
    frozenset({("s1s2", "a1+a2"), ("s1s2s1", "-a1-a2")}),
    frozenset({("s1s2s1", "a2"), ("s1s2s1s2", "-a2")}),
    frozenset({("s2", "a1"), ("s1s2s1s2", "-a1")}),
}
FIGURE_LABELS = sorted(["a2", "a1", "-a1", "2a1+a2", "-2a1-a2", "a1+a2", "-a1-a2", "a2", "-a2",
                        "-a2", "a1", "-a1"])


def criterion_1():
    fw = cambrian_framework(CoxeterElement(FINITE["B2"]), 4)
    delta = fw.roots.delta
    got = {fw.names[v]: [(io.root_string(fw.C[(v, k)]), io.coroot_string(fw.Cv[(v, k)], delta))
                         for k in range(2)] for v in range(fw.nvertices)}
    edges = {frozenset({(fw.names[p[0]], io.root_string(fw.C[p])),
                        (fw.names[q[0]], io.root_string(fw.C[q]))}) for p, q in fw.full_edges()}
    labels = sorted(io.root_string(x) for x in fw.C.values())
    ok = (got == B2_GOLDEN and edges == B2_EDGES and labels == FIGURE_LABELS
          and not fw.half and not fw.unresolved)
    return ok, f"{fw.nvertices} vertices, {len(edges)} edges, 12 labels and 12 co-labels exact"


def criterion_2():
    runs = bad = 0
    witness = None
    for name, M, c, fw in finite_runs():
        runs += 1
        for r in verify_all(fw):
            if not r.passed:
                bad += 1
                witness = witness or (name, order_name(c), r.to_dict())
    faults = detected = 0
    for name in sorted(FINITE):
        fw = cambrian_framework(CoxeterElement(FINITE[name]), POSITIVE_ROOTS[name])
        for port in sorted(fw.C):
            faults += 1
            failed = [r for r in verify_all(corrupt_label(fw, port)) if not r.passed]
            if failed and all(r.witness is not None for r in failed):
                detected += 1
    ok = bad == 0 and detected == faults
    return ok, (f"{runs} oriented runs, failed checks {bad}; faults detected {detected}/{faults}"
                + (f"; first failure {witness}" if witness else ""))


def criterion_3():
    sizes, ok = {}, True
    for name, M, c, fw in finite_runs():
        exg = build_exchange_graph(M, strict=True)
        iso = verify_exchange_isomorphism(fw, seed_map(fw), exg)
        sizes.setdefault(name, set()).add(len(exg))
        ok &= iso.passed and len(exg) == CLUSTERS[name] == fw.nvertices
    detail = ", ".join(f"{k}={sorted(v)}" for k, v in sorted(sizes.items()))
    return ok, f"closure sizes {detail}; isomorphic for every orientation"


BATTERY = ("exchange", "H_labels", "H_sign_coherent", "G_Hcheck_identity", "F_constant_term",
           "g_grading", "G_H_identity_literal")


def criterion_4():
    seeds = 0
    failed = {}
    for name, M, c, fw in finite_runs():
        a = seed_map(fw)
        seeds += len(a.seeds)
        for r in cross_checks(fw, a, True):
            if r.name in BATTERY and not r.passed:
                failed.setdefault(r.name, []).append((name, order_name(c), r.witness))
    ok = not failed
    detail = f"{seeds} seeds checked"
    if failed:
        detail += "; failing: " + "; ".join(
            f"{k} on {sorted({w[0] for w in v})} e.g. {v[0]}" for k, v in sorted(failed.items()))
    return ok, detail, failed


def criterion_5():
    counts = {"nu_d_equals_g": 0, "d_equals_cl": 0}
    bad = []
    for name, M, c, fw in finite_runs():
        for r in cross_checks(fw, seed_map(fw), True):
            if r.name in counts:
                counts[r.name] += r.checked
                if not r.passed:
                    bad.append((name, order_name(c), r.name, r.witness))
    return not bad, f"checked {counts}" + (f"; first failure {bad[0]}" if bad else "")


ALLOWED_PERIODS = {0: 4, 1: 5, 2: 6, 3: 8}


def criterion_6():
    traces = 0
    ok = True
    seen = set()
    for name, M, c, fw in finite_runs():
        for _, t in all_rank_two_traces(fw):
            traces += 1
            bc = abs(t.b * t.c)
            seen.add((bc, t.cycle_length))
            ok &= (t.cycle_length == ALLOWED_PERIODS.get(bc) and t.recurrence_ok
                   and len(set(t.gammas)) == t.cycle_length)
    B = INFINITE["affine2"]
    fw = cambrian_framework(CoxeterElement(B), 16)
    aff = all_rank_two_traces(fw, bound=12)
    open_ok = all(t.is_open for _, t in aff) and any(t.reason == "bound" for _, t in aff)
    # independent check in the cluster algebra: alternating mutations never return
    init = initial_seed(B)
    alt = all(seed_equivalent(mutate_path(B, [(s + k) % 2 for k in range(m)]), init) is None
              for s in (0, 1) for m in range(1, 13))
    ok &= open_ok and alt
    return ok, (f"{traces} finite traces, (|bc|, period) pairs {sorted(seen)}; "
                f"affine: {len(aff)} traces all open, alternating mutation aperiodic to 12")


def criterion_7():
    pairs = 0
    ok = True
    for name, M, c, fw in finite_runs():
        rep = verify_fan(fw)
        pairs += rep.pairs
        ok &= rep.nice
    inf = []
    for name, L in (("affine2", 8), ("affineA2", 6)):
        fw = cambrian_framework(CoxeterElement(INFINITE[name]), L)
        rep = verify_fan(fw)
        inf.append(f"{name} L={L}: {rep.pairs} pairs")
        ok &= rep.nice
    return ok, f"finite: {pairs} pairs; " + "; ".join(inf)


def criterion_8():
    checked = 0
    ok = True
    for name in sorted(FINITE):
        for M, c in all_coxeter_elements(FINITE[name]):
            W = CoxeterGroup(M)
            S = enumerate_sortables(c, POSITIVE_ROOTS[name], W)
            for w in W.elements(POSITIVE_ROOTS[name]):
                checked += 1
                ok &= pi_down(w, c, S).element == pi_down_bruteforce(w, S).element
    return ok, f"{checked} (w, c) pairs agree"


def criterion_9():
    out = []
    ok = True
    for name in ("B2", "A3"):
        fw = cambrian_framework(CoxeterElement(FINITE[name]), POSITIVE_ROOTS[name])
        try:
            a = seed_map(fw)
        except AmplenessViolation as exc:
            return False, f"{name}: {exc}"
        ok &= a.revisits > 0 and len(a.seeds) == fw.nvertices
        out.append(f"{name}: {a.revisits} revisits agree")
    return ok, "; ".join(out)


def criterion_10():
    runs = 0
    ok = True
    witness = None
    frameworks = [(name, fw) for name, M, c, fw in finite_runs()]
    frameworks += [(name, cambrian_framework(CoxeterElement(B), L))
                   for (name, B), L in zip(sorted(INFINITE.items()), (8, 6))]
    skew = []
    for name, fw in frameworks:
        runs += 1
        dual = fw.dual()
        bad = [r for r in verify_all(dual) if not r.passed]
        if bad:
            ok = False
            witness = witness or (name, bad[0].to_dict())
        if all(d == fw.roots.delta[0] for d in fw.roots.delta):
            skew.append(name)
            ok &= fw.Cv == fw.C
    return ok, (f"{runs} dual frameworks pass; co-labels equal labels for {sorted(set(skew))}"
                + (f"; first failure {witness}" if witness else ""))


CRITERIA = {1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4, 5: criterion_5,
            6: criterion_6, 7: criterion_7, 8: criterion_8, 9: criterion_9, 10: criterion_10}


def evaluate(k):
    start = time.perf_counter()
    result = CRITERIA[k]()
    elapsed = time.perf_counter() - start
    ok, detail = result[0], result[1]
    if elapsed > TIME_LIMIT:
        ok = False
        detail += f"; exceeded {TIME_LIMIT:.0f}s"
    line = f"{'PASS' if ok else 'FAIL'} criterion {k}: {detail} ({elapsed:.1f}s)"
    return ok, line, result


# -------------------------------------------------------------- pytest

def _record(request, line):
    print(line)
    request.config._acceptance.append(line)


@pytest.mark.parametrize("k", [1, 2, 3, 5, 6, 7, 8, 9, 10])
def test_criterion(k, request):
    ok, line, _ = evaluate(k)
    _record(request, line)
    assert ok, line


def test_criterion_4(request):
    ok, line, (_, _, failed) = evaluate(4)
    _record(request, line)
    if ok:
        return
    # Only the uncorrected product G.H may fail, and only for non-skew-symmetric
    # presets; the coroot form of the identity must hold everywhere.
    skew = {n for n, B in FINITE.items() if all(B[i][j] == -B[j][i] for i in range(len(B))
                                                for j in range(len(B)))}
    assert set(failed) == {"G_H_identity_literal"}, line
    assert not {w[0] for w in failed["G_H_identity_literal"]} & skew, line
    pytest.xfail("G.H = I fails for non-skew-symmetric presets; G.Hv = I holds at every seed")


if __name__ == "__main__":
    results = [evaluate(k) for k in sorted(CRITERIA)]
    for _, line, _ in results:
        print(line)
    sys.exit(0 if all(ok for ok, _, _ in results) else 1)
