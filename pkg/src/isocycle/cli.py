"""Command-line interface.

Commands: validate, analyze, audit, extend, grow, gen, circ, export-dot,
batch.  Reports are JSON on stdout (or --out).  Exit codes: 0 ok, 1 usage,
2 validation failure, 3 contract violation, 4 no extension found.
The environment variable ISOCYCLE_SEED overrides any --seed value.
"""

import argparse
import json
import logging
import os
import sys

from . import __version__
from .cycle_analysis import (
    analyze_cycle,
    check_cycle,
    check_tree_lemma,
    extension_tree,
    is_isolating,
)
from .discharging import apply_discharging, check_inequalities
from .errors import (
    BaseNotFourConnected,
    ContractViolation,
    CycleTooShort,
    DegenerateSide,
    ExtensionNotFound,
    InconsistentRotation,
    InvalidMove,
    MinorOneFacePresent,
    NonPlanarEmbedding,
    NotCycle,
    NotIsolating,
    NotSimple,
    ParseError,
    SizeTooSmall,
    TooLarge,
    UnknownName,
)
from .extension import (
    find_extension_exhaustive,
    find_extension_fast,
    grow_to_bound,
    isolation_bound,
)
from .generators import gen_insertion_family, gen_random_triangulation, named_graph
from .oracles import oracle_circumference, oracle_isolating_cycles
from .plane_graph import (
    graph_from_json_dict,
    graph_to_dot,
    graph_to_json_dict,
    is_three_connected,
    load_graph,
    save_graph,
)
from .tunnels import find_tunnels, tracks, transfer_pairs

VALIDATION_ERRORS = (
    ParseError,
    NotSimple,
    InconsistentRotation,
    NonPlanarEmbedding,
    NotCycle,
    NotIsolating,
    UnknownName,
    SizeTooSmall,
    BaseNotFourConnected,
    TooLarge,
    InvalidMove,
    OSError,
)
CONTRACT_ERRORS = (
    ContractViolation,
    CycleTooShort,
    MinorOneFacePresent,
    DegenerateSide,
)


class UsageError(Exception):
    pass


class Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _parse_cycle(text):
    if text.startswith("@"):
        with open(text[1:]) as fh:
            data = json.load(fh)
        if not isinstance(data, list):
            raise ParseError("cycle sidecar must be a JSON list of vertex ids")
        return tuple(str(v) for v in data)
    items = [s for s in text.split(",") if s]
    if not items:
        raise ParseError("empty cycle argument")
    return tuple(items)


def _emit(args, payload):
    text = json.dumps(payload, indent=args.json_indent, default=str)
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _node_name(node):
    return f"{node[0]}:{node[1]}"


def _tree_report(analysis, side):
    try:
        checks = check_tree_lemma(analysis, side)
    except DegenerateSide as exc:
        return {"degenerate": str(exc)}
    tree = checks.pop("tree")
    return {
        "kind": tree.kind,
        "nodes": [_node_name(x) for x in tree.nodes],
        "edges": [[_node_name(x), _node_name(y)] for x, y in tree.edges],
        "checks": checks,
    }


def _tunnel_report(analysis, strict):
    out = []
    for tunnel in find_tunnels(analysis):
        entry = {
            "cyclic": tunnel.cyclic,
            "k": tunnel.k,
            "arches": [
                {"face": a.face, "kind": a.kind, "start": a.start} for a in tunnel.arches
            ],
        }
        if not tunnel.cyclic:
            entry["tracks"] = []
            for track in tracks(analysis, tunnel):
                pairs = transfer_pairs(analysis, track, strict=strict)
                entry["tracks"].append(
                    {
                        "direction": track.direction,
                        "exit_face": track.exit_face,
                        "exit_position": track.exit_position,
                        "transfer_pairs": [
                            {"face": p.face, "position": p.position, "order": p.order}
                            for p in pairs
                        ],
                    }
                )
        out.append(entry)
    return out


def analysis_report(analysis, strict=True):
    faces = []
    for fid in range(len(analysis.h.faces)):
        entry = {
            "id": fid,
            "side": analysis.face_side[fid],
            "size": len(analysis.h.faces[fid]),
            "m": analysis.m(fid),
            "minor": analysis.is_minor(fid),
        }
        if analysis.is_minor(fid):
            entry["thin"] = analysis.is_thin(fid)
            arc = analysis.face_arc[fid]
            entry["arc"] = list(arc) if arc else None
            if fid in analysis.apex:
                entry["apex"] = analysis.apex[fid]
        faces.append(entry)
    arches = [
        {
            "face": a.face,
            "kind": a.kind,
            "path": list(a.path),
            "start": a.start,
            "length": a.length,
        }
        for a in analysis.all_arches()
    ]
    return {
        "c": analysis.c,
        "n": analysis.g.n,
        "v_minus": list(analysis.v_minus),
        "v_plus": list(analysis.v_plus),
        "deleted_chords": [list(e) for e in analysis.deleted_chords],
        "faces": faces,
        "arches": arches,
        "trees": {
            "minus": _tree_report(analysis, "minus"),
            "plus": _tree_report(analysis, "plus"),
        },
        "tunnels": _tunnel_report(analysis, strict),
    }


def _require_graph(args):
    return load_graph(args.graph)


def cmd_validate(args):
    try:
        g = _require_graph(args)
    except VALIDATION_ERRORS as exc:
        _emit(args, {"valid": False, "error": type(exc).__name__, "message": str(exc)})
        return 2
    three = is_three_connected(g)
    report = {
        "valid": True,
        "n": g.n,
        "m": g.m,
        "faces": len(g.faces),
        "three_connected": three,
    }
    _emit(args, report)
    if args.level == "polyhedral" and not three:
        return 2
    return 0


def cmd_analyze(args):
    g = _require_graph(args)
    cycle = _parse_cycle(args.cycle)
    analysis = analyze_cycle(g, cycle)
    _emit(args, analysis_report(analysis, strict=args.strict_transfer_pair))
    return 0


def cmd_audit(args):
    g = _require_graph(args)
    cycle = _parse_cycle(args.cycle)
    analysis = analyze_cycle(g, cycle)
    ledger = apply_discharging(analysis, strict_transfer=args.strict_transfer_pair)
    report = ledger.summary()
    ineq1, ineq2, implied = check_inequalities(ledger)
    report["inequality_verdicts"] = {
        "side_inequality": ineq1,
        "length_bound": ineq2,
        "implied_bound": str(implied),
    }
    _emit(args, report)
    return 0


def _move_report(move):
    return {
        "pattern": move.pattern,
        "new_cycle": list(move.new_cycle),
        "added": list(move.added),
        "removed_arcs": [list(r) for r in move.removed_arcs],
        "inserted_paths": [list(r) for r in move.inserted_paths],
    }


def cmd_extend(args):
    g = _require_graph(args)
    cycle = check_cycle(g, _parse_cycle(args.cycle))
    if not is_isolating(g, cycle):
        raise NotIsolating("the given cycle is not isolating")
    move = None
    if not args.tier_2_only:
        move = find_extension_fast(g, cycle)
    if move is None:
        move = find_extension_exhaustive(g, cycle)
    if move is None:
        raise ExtensionNotFound(
            f"no extension found for a cycle of length {len(cycle)}",
            diagnostics={"cycle": list(cycle), "n": g.n},
        )
    _emit(args, _move_report(move))
    return 0


def cmd_grow(args):
    g = _require_graph(args)
    cycle = check_cycle(g, _parse_cycle(args.cycle))
    if not is_isolating(g, cycle):
        raise NotIsolating("the given cycle is not isolating")
    trace = grow_to_bound(g, cycle, tier2_only=args.tier_2_only)
    report = trace.summary()
    report["moves_detail"] = [_move_report(m) for m in trace.moves]
    _emit(args, report)
    if args.dump_dot:
        os.makedirs(args.dump_dot, exist_ok=True)
        for i, cyc in enumerate(trace.cycles):
            path = os.path.join(args.dump_dot, f"step{i:03d}.dot")
            with open(path, "w") as fh:
                fh.write(graph_to_dot(g, highlight_cycle=cyc))
    return 0


def _seed(args):
    env = os.environ.get("ISOCYCLE_SEED")
    if env is not None:
        return int(env)
    return args.seed


def cmd_gen(args):
    if args.family == "named":
        if not args.name:
            raise UsageError("gen --family named needs --name")
        g = named_graph(args.name)
    elif args.family == "insertion":
        if not args.base:
            raise UsageError("gen --family insertion needs --base")
        if os.path.exists(args.base):
            base = load_graph(args.base)
        else:
            base = named_graph(args.base)
        g = gen_insertion_family(base, seed=_seed(args), fill_count=args.fill)
    elif args.family == "random":
        if not args.n:
            raise UsageError("gen --family random needs --n")
        g = gen_random_triangulation(
            args.n, seed=_seed(args), require_four_connected=args.four_connected
        )
    else:
        raise UsageError(f"unknown family {args.family!r}")
    if args.out:
        save_graph(g, args.out)
        print(f"wrote {args.out} (n={g.n}, m={g.m})")
    else:
        _emit(args, graph_to_json_dict(g))
    return 0


def cmd_circ(args):
    g = _require_graph(args)
    value = oracle_circumference(g, limit=args.limit)
    _emit(args, {"circumference": value, "n": g.n})
    return 0


def cmd_export_dot(args):
    g = _require_graph(args)
    cycle = _parse_cycle(args.cycle) if args.cycle else None
    if cycle:
        check_cycle(g, cycle)
    text = graph_to_dot(g, highlight_cycle=cycle)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        print(text, end="")
    return 0


def cmd_batch(args):
    seed = _seed(args)
    results = []
    alarms = 0
    fallbacks = 0
    for i in range(args.count):
        base = gen_random_triangulation(
            args.base_n, seed=seed + i, require_four_connected=True
        )
        fill = args.fill if args.fill is not None else len(base.faces)
        g = gen_insertion_family(base, seed=seed + i, fill_count=fill)
        bound = isolation_bound(g)
        cycles = oracle_isolating_cycles(
            g, min_length=6, max_length=bound - 1, max_count=args.cap
        )
        grown = 0
        for cyc in cycles:
            try:
                trace = grow_to_bound(g, cyc)
                grown += 1
                fallbacks += trace.fallbacks
            except ExtensionNotFound:
                alarms += 1
        results.append(
            {"n": g.n, "bound": bound, "cycles": len(cycles), "grown": grown}
        )
    _emit(
        args,
        {
            "instances": results,
            "alarms": alarms,
            "fallbacks": fallbacks,
        },
    )
    return 4 if alarms else 0


def build_parser():
    p = Parser(prog="isocycle", description=__doc__)
    p.add_argument("--version", action="version", version=f"isocycle {__version__}")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command")

    def common(sp, graph=True, cycle=False):
        if graph:
            sp.add_argument("--graph", required=True, help="graph JSON file")
        if cycle:
            sp.add_argument(
                "--cycle",
                required=True,
                help="comma-separated vertex ids, or @file.json",
            )
        sp.add_argument("--out", help="write the JSON report here instead of stdout")
        sp.add_argument("--json-indent", type=int, default=2)
        sp.add_argument(
            "--strict-transfer-pair",
            action="store_true",
            default=True,
            help="witness arches must come from the same tunnel (default)",
        )
        sp.add_argument(
            "--lax-transfer-pair",
            dest="strict_transfer_pair",
            action="store_false",
            help="allow any 3-arch as a transfer-pair witness",
        )

    sp = sub.add_parser("validate", help="check a graph file")
    common(sp)
    sp.add_argument("--level", choices=["embedding", "polyhedral"], default="embedding")
    sp.set_defaults(func=cmd_validate)

    sp = sub.add_parser("analyze", help="cycle structure report")
    common(sp, cycle=True)
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("audit", help="discharging ledger report")
    common(sp, cycle=True)
    sp.set_defaults(func=cmd_audit)

    sp = sub.add_parser("extend", help="one extension step")
    common(sp, cycle=True)
    sp.add_argument("--tier-2-only", action="store_true")
    sp.set_defaults(func=cmd_extend)

    sp = sub.add_parser("grow", help="extend a cycle to the length bound")
    common(sp, cycle=True)
    sp.add_argument("--tier-2-only", action="store_true")
    sp.add_argument("--dump-dot", metavar="DIR", help="write DOT snapshots per step")
    sp.set_defaults(func=cmd_grow)

    sp = sub.add_parser("gen", help="generate an instance")
    common(sp, graph=False)
    sp.add_argument("--family", choices=["named", "insertion", "random"], required=True)
    sp.add_argument("--name", help="named graph, e.g. cube or wheel:7")
    sp.add_argument("--base", help="base graph name or JSON path (insertion family)")
    sp.add_argument("--fill", type=int, help="number of faces to fill (insertion)")
    sp.add_argument("--n", type=int, help="vertex count (random family)")
    sp.add_argument("--four-connected", action="store_true")
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("circ", help="exact circumference")
    common(sp)
    sp.add_argument("--limit", type=int, default=30)
    sp.set_defaults(func=cmd_circ)

    sp = sub.add_parser("export-dot", help="Graphviz export")
    common(sp)
    sp.add_argument("--cycle", help="highlight this cycle")
    sp.set_defaults(func=cmd_export_dot)

    sp = sub.add_parser("batch", help="generate and grow a corpus")
    common(sp, graph=False)
    sp.add_argument("--count", type=int, default=5)
    sp.add_argument("--base-n", type=int, default=8)
    sp.add_argument("--fill", type=int)
    sp.add_argument("--cap", type=int, default=5, help="isolating cycles per instance")
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_batch)

    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("a command is required (try --help)")
        logging.basicConfig(
            level=logging.DEBUG if args.verbose else logging.WARNING,
            format="%(levelname)s %(name)s: %(message)s",
        )
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except ExtensionNotFound as exc:
        print(
            json.dumps(
                {"error": "ExtensionNotFound", "message": str(exc), **exc.diagnostics},
                indent=2,
            ),
            file=sys.stderr,
        )
        return 4
    except CONTRACT_ERRORS as exc:
        print(
            json.dumps({"error": type(exc).__name__, "message": str(exc)}, indent=2),
            file=sys.stderr,
        )
        return 3
    except VALIDATION_ERRORS as exc:
        print(
            json.dumps({"error": type(exc).__name__, "message": str(exc)}, indent=2),
            file=sys.stderr,
        )
        return 2


if __name__ == "__main__":
    sys.exit(main())
