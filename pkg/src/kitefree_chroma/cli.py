"""Command line: ``kitefree-chroma {color|check|oracle|fuzz|gen|audit}``.

Exit status: 0 ok, 2 parse error, 3 out-of-class input, 4 soundness violation,
5 oracle size bound exceeded. A multi-graph input exits with the largest
status among its graphs.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from . import report as rep
from .coloring import CaseTrace, SoundnessError, budget_for, is_root_to_leaf
from .coloring.dispatch import color_ktfree
from .detect import DetectError, class_check, verify_embedding
from .formats import FORMATS, ParseError, detect_format, parse, parse_graph6_lines, to_graph6
from .generators import GenError, GenSpec
from .graph import Graph, is_clique
from .harness import coverage_audit, run_fuzz
from .oracle import DEFAULT_BOUND, OracleBoundError, check_coloring, max_clique, optimal_coloring


class InputError(Exception):
    pass


def _read(path: str) -> bytes:
    try:
        return sys.stdin.buffer.read() if path == "-" else Path(path).read_bytes()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc


def _parse(data: bytes, path: str, fmt: str | None) -> list[Graph]:
    try:
        fmt = fmt or ("graph6" if path == "-" else detect_format(path))
        text = data.decode("ascii")
        graphs = parse_graph6_lines(text) if fmt == "graph6" else [parse(text, fmt)]
    except (ParseError, UnicodeDecodeError) as exc:
        raise InputError(str(exc)) from exc
    if not graphs:
        raise InputError("input holds no graph")
    return graphs


def _load(path: str, fmt: str | None) -> tuple[bytes, list[Graph]]:
    data = _read(path)
    return data, _parse(data, path, fmt)


def _instance(index: int, g: Graph) -> dict:
    return {"index": index, "n": g.n, "m": g.m, "graph6": to_graph6(g), "exit_code": rep.EXIT_OK,
            "result": None, "case_trace": [], "verification": {}, "timings": {}, "error": None}


def _refusal(kind: str, message: str, witness=()) -> dict:
    return {"kind": kind, "message": message, "witness": list(witness), "trace": []}


def _color_one(index: int, g: Graph, args) -> dict:
    out = _instance(index, g)
    budget = budget_for(args.t)
    class_id = f"main2K2K{args.t}"
    if not args.force:
        start = time.perf_counter()
        cr = class_check(g, class_id)
        out["timings"]["precheck_s"] = time.perf_counter() - start
        if not cr.member:
            pid, emb = cr.violations[0]
            out["exit_code"] = rep.EXIT_OUT_OF_CLASS
            out["error"] = _refusal("OutOfClass", f"input contains an induced {pid}", emb.map)
            out["error"]["class_report"] = cr.to_json()
            return out
    trace = CaseTrace()
    start = time.perf_counter()
    try:
        col = color_ktfree(g, args.t, precheck=False, trace=trace)
    except SoundnessError as exc:
        out["timings"]["color_s"] = time.perf_counter() - start
        out["case_trace"] = list(exc.trace)
        out["exit_code"] = rep.EXIT_SOUNDNESS
        out["error"] = exc.to_json()
        return out
    out["timings"]["color_s"] = time.perf_counter() - start
    out["case_trace"] = list(trace)
    out["result"] = {"colors": list(col.colors), "used": col.used, "budget": budget}

    start = time.perf_counter()
    bad = check_coloring(g, col.colors, budget)
    ver = {"proper_within_budget": bad is None, "trace_root_to_leaf": is_root_to_leaf(trace),
           "oracle_chi": None, "not_below_chi": None}
    if g.n <= args.oracle_bound:
        chi = optimal_coloring(g, args.oracle_bound).used
        ver["oracle_chi"] = chi
        ver["not_below_chi"] = col.used >= chi
    out["timings"]["verify_s"] = time.perf_counter() - start
    out["verification"] = ver
    if bad is not None or not ver["trace_root_to_leaf"] or ver["not_below_chi"] is False:
        out["exit_code"] = rep.EXIT_SOUNDNESS
        out["error"] = _refusal("StableSetViolated", bad or "coloring failed re-verification")
    return out


def _check_one(index: int, g: Graph, args) -> dict:
    out = _instance(index, g)
    start = time.perf_counter()
    cr = class_check(g, args.class_id)
    out["timings"]["check_s"] = time.perf_counter() - start
    out["result"] = cr.to_json()
    out["verification"] = {
        "witnesses_verified": all(verify_embedding(g, emb) for _, emb in cr.violations),
    }
    return out


def _oracle_one(index: int, g: Graph, args) -> dict:
    out = _instance(index, g)
    start = time.perf_counter()
    try:
        col = optimal_coloring(g, args.oracle_bound)
        clique = sorted(max_clique(g, args.oracle_bound))
    except OracleBoundError as exc:
        out["exit_code"] = rep.EXIT_ORACLE_BOUND
        out["error"] = _refusal("OracleBound", str(exc))
        return out
    out["timings"]["oracle_s"] = time.perf_counter() - start
    out["result"] = {"chi": col.used, "omega": len(clique), "colors": list(col.colors),
                     "clique": clique}
    out["verification"] = {
        "coloring_proper": check_coloring(g, col.colors) is None,
        "clique_valid": is_clique(g, clique),
        "chi_at_least_omega": col.used >= len(clique),
    }
    return out


_PER_GRAPH = {"color": _color_one, "check": _check_one, "oracle": _oracle_one}


def _emit(report: dict, args) -> None:
    text = rep.dumps(report)
    if args.json:
        sys.stdout.write(text)


def _run_graphs(args) -> int:
    options = {k: getattr(args, k) for k in ("t", "class_id", "force", "oracle_bound", "format")
               if hasattr(args, k)}
    report = {"schema": rep.SCHEMA_VERSION, "kind": "run", "command": args.command,
              "options": options, "input_digest": rep.digest(b""), "exit_code": rep.EXIT_OK,
              "instances": [], "error": None}
    try:
        data = _read(args.input)
        report["input_digest"] = rep.digest(data)
        graphs = _parse(data, args.input, args.format)
    except InputError as exc:
        report["exit_code"] = rep.EXIT_PARSE
        report["error"] = _refusal("ParseError", str(exc))
        _emit(report, args)
        if not args.json:
            print(f"parse error: {exc}", file=sys.stderr)
        return rep.EXIT_PARSE
    one = _PER_GRAPH[args.command]
    report["instances"] = [one(i, g, args) for i, g in enumerate(graphs)]
    report["exit_code"] = max(inst["exit_code"] for inst in report["instances"])
    _emit(report, args)
    if not args.json:
        for inst in report["instances"]:
            print(_summary(args.command, inst))
    return report["exit_code"]


def _summary(command: str, inst: dict) -> str:
    head = f"[{inst['index']}] n={inst['n']} m={inst['m']}"
    if inst["error"] is not None:
        return f"{head} exit={inst['exit_code']} {inst['error']['kind']}: {inst['error']['message']}"
    res = inst["result"]
    if command == "color":
        return f"{head} colors={res['used']}/{res['budget']} trace={' > '.join(inst['case_trace'])}"
    if command == "check":
        if res["member"]:
            return f"{head} member of {res['class_id']}"
        v = res["violations"][0]
        return f"{head} not in {res['class_id']}: induced {v['pattern']} at {v['map']}"
    return f"{head} chi={res['chi']} omega={res['omega']}"


def _cmd_fuzz(args) -> int:
    report = run_fuzz(args.seed, args.budget, args.max_n, args.mode, args.class_id,
                      args.oracle_bound, args.workers)
    text = rep.dumps(report)
    if args.out:
        Path(args.out).write_text(text)
    if args.json:
        sys.stdout.write(text)
    else:
        print(f"{report['mode']} fuzz seed={report['seed']}: {report['sampled']} sampled, "
              f"{report['absent']} absent, max colors {report['max_colors']}, "
              f"{len(report['violations'])} violations")
    return report["exit_code"]


def _cmd_gen(args) -> int:
    params: dict = {"seed": args.seed, "class_id": args.class_id}
    if args.n is not None:
        params["n"] = args.n
    if args.kind == "tight":
        params["plus_k1"] = args.apex
    elif args.kind == "c5_blowup":
        try:
            params["sizes"] = tuple(int(s) for s in (args.sizes or "").split(","))
        except ValueError:
            print(f"invalid --sizes {args.sizes!r}", file=sys.stderr)
            return rep.EXIT_PARSE
    elif args.kind == "random_class":
        params["mode"] = args.mode
    elif args.kind == "exhaustive":
        params["dedup"] = args.dedup
    try:
        graphs = GenSpec(args.kind, params).run()
    except (GenError, DetectError, ValueError) as exc:
        print(f"invalid generator spec: {exc}", file=sys.stderr)
        return rep.EXIT_PARSE
    text = "".join(to_graph6(g) + "\n" for g in graphs)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return rep.EXIT_OK


def _cmd_audit(args) -> int:
    try:
        data, graphs = _load(args.input, args.format)
    except InputError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return rep.EXIT_PARSE
    report = coverage_audit(graphs, rep.digest(data))
    text = rep.dumps(report)
    if args.json:
        sys.stdout.write(text)
    else:
        hit = sum(1 for c in report["covered"].values() if c)
        print(f"{report['instances']} graphs, {hit}/{len(report['covered'])} branch tags reached")
        for tag in report["uncovered"]:
            print(f"uncovered leaf: {tag}")
        for f in report["failures"]:
            print(f"failure at [{f['index']}] {f['entry']}: {f['detail']}")
    return rep.EXIT_SOUNDNESS if report["failures"] else rep.EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="kitefree-chroma",
                                 description="Certified colorings of (2K2, K3+K1, C5+K1, K_t)-free graphs.")
    sub = ap.add_subparsers(dest="command", required=True)

    def graph_input(p):
        p.add_argument("input", help="graph file (.g6, .col, .txt) or - for graph6 on stdin")
        p.add_argument("--format", choices=FORMATS, help="override extension-based detection")
        p.add_argument("--json", action="store_true", help="print the JSON report")

    p = sub.add_parser("color", help="color with at most 2t-5 colors")
    graph_input(p)
    p.add_argument("--t", type=int, default=6, help="clique bound: input must be K_t-free (t >= 6)")
    p.add_argument("--force", action="store_true", help="skip the class precheck")
    p.add_argument("--oracle-bound", type=int, default=DEFAULT_BOUND,
                   help="cross-check against the exact chromatic number up to this many vertices")

    p = sub.add_parser("check", help="class membership with witnesses")
    graph_input(p)
    p.add_argument("--class", dest="class_id", default="main2K2K6")

    p = sub.add_parser("oracle", help="exact chromatic and clique number")
    graph_input(p)
    p.add_argument("--oracle-bound", type=int, default=DEFAULT_BOUND)

    p = sub.add_parser("fuzz", help="seeded differential or conjecture campaign")
    p.add_argument("--mode", choices=("differential", "conjecture"), default="differential")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=200, help="number of instances")
    p.add_argument("--max-n", type=int, default=10)
    p.add_argument("--class", dest="class_id", default="main2K2K6")
    p.add_argument("--oracle-bound", type=int, default=DEFAULT_BOUND)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", help="also write the JSON report here")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("gen", help="write graph6 lines")
    p.add_argument("kind", choices=("tight", "c5_blowup", "random_class", "exhaustive"))
    p.add_argument("--n", type=int)
    p.add_argument("--apex", action="store_true", help="tight: join a K1")
    p.add_argument("--sizes", help="c5_blowup: five comma-separated sizes")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--class", dest="class_id", default="main2K2K6")
    p.add_argument("--mode", default="grow", help="random_class: rejection, grow, c5, c9bar, ...")
    p.add_argument("--dedup", action="store_true", help="exhaustive: one graph per isomorphism class")
    p.add_argument("--out")

    p = sub.add_parser("audit", help="branch coverage of a graph6 corpus")
    graph_input(p)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return rep.EXIT_OK if exc.code == 0 else rep.EXIT_PARSE
    try:
        if args.command in _PER_GRAPH:
            if getattr(args, "t", 6) < 6:
                print("--t must be at least 6", file=sys.stderr)
                return rep.EXIT_PARSE
            if args.command == "check":
                class_check(Graph(0, ()), args.class_id)
            return _run_graphs(args)
        if args.command == "fuzz":
            return _cmd_fuzz(args)
        if args.command == "gen":
            return _cmd_gen(args)
        return _cmd_audit(args)
    except DetectError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return rep.EXIT_PARSE
    except ValueError as exc:
        if args.command == "fuzz":
            print(f"error: {exc}", file=sys.stderr)
            return rep.EXIT_PARSE
        raise


if __name__ == "__main__":
    sys.exit(main())
