"""Fuzz campaigns and the branch-coverage audit behind the CLI.

Each fuzz instance derives its own RNG from (seed, index), so the result
does not depend on worker count or completion order.
"""

from __future__ import annotations

import random
import re
from collections import Counter
from concurrent.futures import ProcessPoolExecutor

from .coloring import LEAVES, REGISTRY, CaseTrace, SoundnessError, is_root_to_leaf
from .coloring.dispatch import color_c5free_k5free, color_ktfree
from .detect import class_check, in_class
from .formats import to_graph6
from .generators import REJECTION_BOUND, random_in_class
from .graph import Graph
from .oracle import DEFAULT_BOUND, check_coloring, chromatic_number, clique_number, optimal_coloring
from .report import EXIT_OK, EXIT_SOUNDNESS, SCHEMA_VERSION

CONJECTURE_CLASS = "P5kite"
_GROW_MODES = ("grow", "grow", "c5", "2c5", "c9bar", "c7bar_dominated")


def main_class_t(class_id: str) -> int:
    m = re.fullmatch(r"main2K2K(\d+)", class_id)
    if not m or int(m.group(1)) < 6:
        raise ValueError(f"differential fuzz needs a main2K2K<t> class with t >= 6, got {class_id!r}")
    return int(m.group(1))


def _draw(seed: int, index: int, max_n: int, class_id: str) -> Graph | None:
    rng = random.Random(f"fuzz:{seed}:{index}")
    n = rng.randint(1, max_n)
    modes = _GROW_MODES + (("rejection",) if n <= min(8, REJECTION_BOUND) else ())
    mode = rng.choice(modes)
    g = random_in_class(f"{seed}:{index}", n, class_id, mode)
    if g is None and mode != "grow":
        g = random_in_class(f"{seed}:{index}", n, class_id, "grow")
    return g


def _differential_one(job) -> dict:
    seed, index, max_n, class_id, oracle_bound = job
    t = main_class_t(class_id)
    budget = 2 * t - 5
    g = _draw(seed, index, max_n, class_id)
    if g is None:
        return {"index": index, "absent": True}
    out = {"index": index, "absent": False, "graph6": to_graph6(g), "trace": [], "used": 0,
           "violations": []}

    def flag(kind, detail):
        out["violations"].append({"index": index, "kind": kind, "graph6": out["graph6"],
                                  "detail": detail})

    if not in_class(g, class_id):
        flag("sampler", f"sample is not in {class_id}")
        return out
    trace = CaseTrace()
    try:
        col = color_ktfree(g, t, precheck=False, trace=trace)
    except SoundnessError as exc:
        out["trace"] = list(exc.trace)
        flag("soundness", exc.message)
        return out
    out["trace"] = list(trace)
    out["used"] = col.used
    bad = check_coloring(g, col.colors, budget)
    if bad:
        flag("improper", bad)
    if not is_root_to_leaf(trace):
        flag("trace", f"trace {list(trace)} is not a root-to-leaf path")
    if g.n <= oracle_bound:
        chi = chromatic_number(g, oracle_bound)
        if col.used < chi:
            flag("undercut", f"{col.used} colors but chromatic number is {chi}")
    return out


def _conjecture_one(job) -> dict:
    seed, index, max_n, _, oracle_bound = job
    rng = random.Random(f"fuzz:{seed}:{index}")
    n = rng.randint(1, min(max_n, oracle_bound))
    mode = "rejection" if n <= REJECTION_BOUND and rng.random() < 0.5 else "grow"
    g = random_in_class(f"{seed}:{index}", n, CONJECTURE_CLASS, mode)
    if g is None:
        return {"index": index, "absent": True}
    out = {"index": index, "absent": False, "graph6": to_graph6(g), "violations": []}
    omega = clique_number(g, oracle_bound)
    col = optimal_coloring(g, oracle_bound)
    out["omega"] = omega
    out["used"] = col.used
    bad = check_coloring(g, col.colors)
    if bad:
        out["violations"].append({"index": index, "kind": "harness-bug", "graph6": out["graph6"],
                                  "detail": f"oracle coloring rejected: {bad}"})
    if col.used > 3 * omega // 2:
        kind = "harness-bug" if omega <= 6 else "counterexample"
        out["violations"].append({"index": index, "kind": kind, "graph6": out["graph6"],
                                  "detail": f"chi={col.used} > floor(3*{omega}/2)"})
    return out


def run_fuzz(seed: int, instances: int, max_n: int, mode: str = "differential",
             class_id: str = "main2K2K6", oracle_bound: int = DEFAULT_BOUND,
             workers: int = 1) -> dict:
    """Fuzz campaign report (deterministic: no timings, merged by instance index)."""
    if mode not in ("differential", "conjecture"):
        raise ValueError(f"unknown fuzz mode {mode!r}")
    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    if mode == "differential":
        main_class_t(class_id)
    else:
        class_id = CONJECTURE_CLASS
    worker = _differential_one if mode == "differential" else _conjecture_one
    jobs = [(seed, i, max_n, class_id, oracle_bound) for i in range(instances)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(worker, jobs, chunksize=16))
    else:
        records = [worker(j) for j in jobs]
    records.sort(key=lambda r: r["index"])

    hist: Counter = Counter()
    omegas: Counter = Counter()
    violations = []
    max_colors = 0
    sampled = 0
    for r in records:
        if r["absent"]:
            continue
        sampled += 1
        hist.update(r.get("trace", ()))
        if "omega" in r:
            omegas[str(r["omega"])] += 1
        max_colors = max(max_colors, r["used"])
        violations.extend(r["violations"])
    report = {
        "schema": SCHEMA_VERSION,
        "kind": "fuzz",
        "mode": mode,
        "seed": seed,
        "max_n": max_n,
        "class_id": class_id,
        "instances": instances,
        "sampled": sampled,
        "absent": instances - sampled,
        "branch_histogram": dict(sorted(hist.items())),
        "max_colors": max_colors,
        "violations": violations,
        "exit_code": EXIT_SOUNDNESS if violations else EXIT_OK,
    }
    if mode == "conjecture":
        report["omega_histogram"] = dict(sorted(omegas.items(), key=lambda kv: int(kv[0])))
    return report


def _audit_entries(g: Graph):
    """Entry points that accept ``g``: the 7-color pipeline and the 5-color C5-free one."""
    if class_check(g, "main2K2K6").member:
        yield "color_main", 7, lambda tr: color_ktfree(g, 6, precheck=False, trace=tr)
    if class_check(g, "c5free2K2K5").member:
        yield "color_c5free_k5free", 5, lambda tr: color_c5free_k5free(g, tr)


def coverage_audit(graphs, input_digest: str = "") -> dict:
    """Which branch tags the graphs drive, and which leaves nothing reaches."""
    covered = Counter({tag: 0 for tag in REGISTRY})
    failures = []
    for index, g in enumerate(graphs):
        entries = list(_audit_entries(g))
        if not entries:
            failures.append({"index": index, "entry": None, "detail": "graph is in no supported class"})
        for name, budget, run in entries:
            trace = CaseTrace()
            try:
                col = run(trace)
            except SoundnessError as exc:
                failures.append({"index": index, "entry": name, "detail": str(exc)})
                continue
            bad = check_coloring(g, col.colors, budget)
            if bad:
                failures.append({"index": index, "entry": name, "detail": bad})
                continue
            covered.update(set(trace))
    return {
        "schema": SCHEMA_VERSION,
        "kind": "audit",
        "input_digest": input_digest,
        "instances": len(graphs),
        "covered": dict(sorted(covered.items())),
        "uncovered": sorted(t for t in LEAVES if covered[t] == 0),
        "failures": failures,
    }
