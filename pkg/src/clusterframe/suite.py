"""End-to-end verification of a Cambrian framework against cluster data."""
import os
import random
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from .cluster import build_exchange_graph
from .coxeter import CoxeterElement, CoxeterGroup, all_coxeter_elements
from .framework import (all_rank_two_traces, cambrian_framework, cross_checks,
                        seed_map, verify_all, verify_exchange_isomorphism, verify_fan,
                        verify_well_connected)
from .presets import FINITE, INFINITE, POSITIVE_ROOTS
from .rootspace import RootSystem, is_finite_type
from .sortable import pi_down, pi_down_bruteforce

WORKERS_ENV = "CLUSTERFRAME_WORKERS"
DEFAULT_SEED = 20240101


def workers():
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


def _entry(name, passed, asserted=True, detail=None):
    return {"check": name, "passed": bool(passed), "asserted": asserted, "detail": detail}


def check_forms(B, rng, samples=20):
    """Randomized form identities: skew/symmetric parts of E and W-invariance."""
    rs = RootSystem(B)
    n = rs.n
    out = []

    def rvec():
        return tuple(Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(n))

    ok_split, ok_inv = True, True
    for _ in range(samples):
        x, y = rvec(), rvec()
        if rs.omega(x, y) != rs.euler(x, y) - rs.euler(y, x):
            ok_split = False
        if rs.kappa(x, y) != rs.euler(x, y) + rs.euler(y, x):
            ok_split = False
        for i in range(n):
            if rs.kappa(rs.simple_reflect(i, x), rs.simple_reflect(i, y)) != rs.kappa(x, y):
                ok_inv = False
    out.append(_entry("forms_split", ok_split))
    out.append(_entry("reflection_invariance", ok_inv))
    return out


def verify_orientation(B, L, finite, trace_bound=12, fan=True):
    """Full battery for one acyclic exchange matrix; returns a list of entries."""
    c = CoxeterElement(B)
    group = CoxeterGroup(B)
    fw = cambrian_framework(c, L, group)
    out = []
    for r in verify_all(fw):
        out.append(_entry(f"condition:{r.name}", r.passed, True, r.to_dict()))
    assignment = seed_map(fw)
    out.append(_entry("ampleness", True, True, {"revisits": assignment.revisits}))
    for r in cross_checks(fw, assignment, finite):
        out.append(_entry(f"cross:{r.name}", r.passed, r.asserted, r.to_dict()))
    traces = all_rank_two_traces(fw, trace_bound)
    if finite:
        ok = all(t.cycle_length is not None and t.h is not None and t.cycle_length == t.h + 2
                 and t.recurrence_ok and len(set(t.gammas)) == t.h + 2 for _, t in traces)
        out.append(_entry("rank_two_periodic", ok, True,
                          sorted({(t.h, t.cycle_length) for _, t in traces}, key=str)))
        out.append(_entry("complete", not fw.half and not fw.unresolved and not fw.boundary))
        exg = build_exchange_graph(B)
        iso = verify_exchange_isomorphism(fw, assignment, exg)
        out.append(_entry("exchange_isomorphism", iso.passed and exg.closed, True,
                          {"closure": len(exg), "vertices": fw.nvertices}))
        elements = group.elements(L)
        sortables = fw.source.vertices
        pi_ok = all(pi_down(w, c, sortables).element == pi_down_bruteforce(w, sortables).element
                    for w in elements)
        out.append(_entry("pi_down_oracle", pi_ok, True, {"elements": len(elements)}))
        labels_ok = len({frozenset(fw.labels(v)) for v in range(fw.nvertices)}) == fw.nvertices
        out.append(_entry("injective_labels", labels_ok))
    else:
        closed = [t for _, t in traces if t.cycle_length is not None]
        ok = all(t.h is not None and t.cycle_length == t.h + 2 and t.recurrence_ok for t in closed)
        out.append(_entry("rank_two_closed_periodic", ok, True,
                          {"closed": len(closed), "open": len(traces) - len(closed)}))
    if fan:
        rep = verify_fan(fw)
        out.append(_entry("fan", rep.nice, True, rep.to_dict()))
        if rep.nice:
            wc = verify_well_connected(fw, rep)
            out.append(_entry("well_connected", wc.passed, True, wc.to_dict()))
    return out


def _run_type(args):
    name, B, L, finite, seed = args
    rng = random.Random(f"{seed}:{name}")
    results = []
    for M, c in all_coxeter_elements(B):
        entries = check_forms(M, rng) + verify_orientation(M, L, finite)
        results.append({"matrix": [list(r) for r in M], "order": list(c.order), "checks": entries})
    return {"type": name, "finite": finite, "length": L, "orientations": results}


def run_suite(types, seed=DEFAULT_SEED, lengths=None):
    """Run the battery for named presets; ordered deterministic output."""
    lengths = lengths or {}
    jobs = []
    for name in types:
        if name in FINITE:
            B = FINITE[name]
            L = lengths.get(name, POSITIVE_ROOTS[name])
            finite = True
        elif name in INFINITE:
            B = INFINITE[name]
            L = lengths.get(name, 6)
            finite = is_finite_type(B)
        else:
            raise KeyError(f"unknown preset {name!r}")
        jobs.append((name, B, L, finite, seed))
    k = workers()
    if k > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=k) as pool:
            reports = list(pool.map(_run_type, jobs))
    else:
        reports = [_run_type(j) for j in jobs]
    return reports


def run_matrix(B, L, seed=DEFAULT_SEED, all_orientations=False):
    finite = is_finite_type(B)
    rng = random.Random(seed)
    pairs = all_coxeter_elements(B) if all_orientations else [(tuple(map(tuple, B)), CoxeterElement(B))]
    results = []
    for M, c in pairs:
        entries = check_forms(M, rng) + verify_orientation(M, L, finite)
        results.append({"matrix": [list(r) for r in M], "order": list(c.order), "checks": entries})
    return {"type": "matrix", "finite": finite, "length": L, "orientations": results}


def failures(reports):
    """Asserted checks that failed, as (type, order, check) triples."""
    out = []
    for rep in reports:
        for o in rep["orientations"]:
            for e in o["checks"]:
                if e["asserted"] and not e["passed"]:
                    out.append((rep["type"], tuple(o["order"]), e["check"]))
    return out


__all__ = ["run_suite", "run_matrix", "failures", "verify_orientation"]
