"""Command line entry point: ``bcontinuity {analyze,spectrum,descend,generate,screen}``."""

from __future__ import annotations

import argparse
import hashlib
import json
import logging
import sys
from pathlib import Path

from .coloring import Coloring
from .descent import certify_continuity
from .errors import CapExceededError, ImpossibleStateError, ParseError, PreconditionError
from .generators import generate
from .graph import ACYCLIC, dense_vertices, girth, is_bipartite, is_regular, m_degree
from .io import parse_edge_list, parse_graph6, to_graph6
from .iris import find_dilated_iris, find_iris
from .oracle import DEFAULT_CAP, b_spectrum

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CAP = 3
EXIT_IMPOSSIBLE = 4

log = logging.getLogger("bcontinuity")


class UsageError(Exception):
    pass


def _girth_value(g):
    value = girth(g)
    return "acyclic" if value == ACYCLIC else int(value)


def _load_graph(args):
    sources = [s for s in (args.gen, args.g6, args.edges) if s is not None]
    if len(sources) != 1:
        raise UsageError("give exactly one of --gen, --g6, --edges")
    if args.gen is not None:
        spec = args.gen
        if args.seed is not None and spec.startswith("random_"):
            spec = f"{spec}:{args.seed}"
        g = generate(spec)
        if g is None:
            raise UsageError(f"generator {args.gen!r} found no graph within its attempt budget")
        return g
    if args.g6 is not None:
        return parse_graph6(args.g6)
    return parse_edge_list(Path(args.edges).read_text())


def _analyze(g, args):
    m = m_degree(g) if g.n else 0
    ks = [args.k] if args.k is not None else list(range(2, m + 1))
    irises = {}
    for k in ks:
        plain = find_iris(g, k)
        dilated = find_dilated_iris(g, k)
        irises[str(k)] = {
            "plain": plain.to_dict() if plain else None,
            "dilated": dilated.to_dict() if dilated else None,
        }
    return {
        "graph6": to_graph6(g),
        "n": g.n,
        "edges": len(g.edges),
        "girth": _girth_value(g),
        "m": m,
        "degrees": g.degrees(),
        "dense": {str(k): sorted(dense_vertices(g, k)) for k in range(1, m + 2)},
        "irises": irises,
    }


def _spectrum(g, args):
    report = b_spectrum(g, cap=args.cap)
    out = report.to_dict()
    out["graph6"] = to_graph6(g)
    return out


def _descend(g, args):
    start = Coloring.from_text(g, args.coloring) if args.coloring else None
    return certify_continuity(g, cap=args.cap, start=start).to_dict()


def _passes_filters(g, args):
    if args.girth_min is not None and girth(g) < args.girth_min:
        return False
    if args.regular and not is_regular(g):
        return False
    if args.bipartite and not is_bipartite(g):
        return False
    return True


def _screen(args, stream):
    graphs, errors = [], []
    filtered = 0
    for lineno, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            g = parse_graph6(line)
        except ParseError as exc:
            errors.append({"line": lineno, "input": line, "error": str(exc)})
            continue
        if g.n == 0 or not _passes_filters(g, args):
            filtered += 1
            continue
        try:
            report = b_spectrum(g, cap=args.cap)
        except CapExceededError as exc:
            errors.append({"line": lineno, "input": line, "error": str(exc)})
            continue
        entry = {
            "line": lineno,
            "graph6": line,
            "n": g.n,
            "girth": _girth_value(g),
            "chi": report.chi,
            "b": report.b,
            "spectrum": list(report.spectrum),
            "continuous": report.is_continuous,
        }
        if args.verbose:
            entry["witnesses"] = report.to_dict()["witnesses"]
        graphs.append(entry)
    flagged = [{"graph6": e["graph6"], "spectrum": e["spectrum"]} for e in graphs if not e["continuous"]]
    return {
        "graphs": graphs,
        "errors": errors,
        "summary": {
            "scanned": len(graphs),
            "filtered_out": filtered,
            "continuous": sum(e["continuous"] for e in graphs),
            "non_continuous": flagged,
            "errors": len(errors),
        },
    }


def _render_text(command, report):
    lines = []
    if command == "screen":
        for e in report["graphs"]:
            mark = "continuous" if e["continuous"] else "NON-CONTINUOUS"
            lines.append(f"{e['graph6']}\tn={e['n']}\tspectrum={e['spectrum']}\t{mark}")
        for e in report["errors"]:
            lines.append(f"line {e['line']}: {e['error']}")
        s = report["summary"]
        lines.append(
            f"scanned {s['scanned']}, continuous {s['continuous']}, "
            f"non-continuous {len(s['non_continuous'])}, filtered {s['filtered_out']}, errors {s['errors']}"
        )
        return "\n".join(lines)
    for key, value in report.items():
        if isinstance(value, (dict, list)) and key in ("steps", "irises", "witnesses", "dense"):
            lines.append(f"{key}:")
            items = value.items() if isinstance(value, dict) else enumerate(value)
            for sub, item in items:
                lines.append(f"  {sub}: {json.dumps(item, sort_keys=True)}")
        else:
            lines.append(f"{key}: {value}")
    return "\n".join(lines)


def _dump_instance(exc, dump_dir):
    payload = json.dumps({"error": str(exc), "instance": exc.instance}, sort_keys=True, indent=2, default=str)
    digest = hashlib.sha1(payload.encode()).hexdigest()[:12]
    path = Path(dump_dir) / f"bcontinuity-instance-{digest}.json"
    path.write_text(payload + "\n")
    return path


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bcontinuity", description="b-colorings, b-spectra and b-continuity checks")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_input=True):
        if with_input:
            p.add_argument("--gen", help="generator spec name:params, e.g. crown:4")
            p.add_argument("--g6", help="graph6 string")
            p.add_argument("--edges", metavar="FILE", help="edge-list file")
        p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="vertex cap for exhaustive search")
        p.add_argument("--seed", type=int, help="seed appended to random generator specs")
        p.add_argument("--format", choices=["text", "json"], default="text")
        p.add_argument("--verbose", action="store_true")
        p.add_argument("--dump-dir", default=".", help="where impossible-state instances are written")

    p = sub.add_parser("analyze", help="girth, m(G), dense sets and irises")
    common(p)
    p.add_argument("--k", type=int, help="only look for irises with this k")
    common(sub.add_parser("spectrum", help="exact b-spectrum"))
    p = sub.add_parser("descend", help="certify continuity by descent from b(G)")
    common(p)
    p.add_argument("--coloring", help="start from this b-coloring (comma-separated) instead of b(G)")
    common(sub.add_parser("generate", help="print a generated graph as graph6"))
    p = sub.add_parser("screen", help="screen a stream of graph6 lines for non-continuous graphs")
    common(p, with_input=False)
    p.add_argument("--input", metavar="FILE", help="read graph6 lines from FILE instead of stdin")
    p.add_argument("--girth-min", type=int)
    p.add_argument("--regular", action="store_true")
    p.add_argument("--bipartite", action="store_true")
    return parser


def run(argv=None, stdin=None, stdout=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        if args.command == "screen":
            if args.input:
                with open(args.input) as fh:
                    report = _screen(args, fh)
            else:
                report = _screen(args, stdin)
        else:
            g = _load_graph(args)
            if args.command == "generate":
                print(to_graph6(g), file=stdout)
                return EXIT_OK
            handler = {"analyze": _analyze, "spectrum": _spectrum, "descend": _descend}[args.command]
            report = handler(g, args)
    except (UsageError, ParseError, PreconditionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    except CapExceededError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ImpossibleStateError as exc:
        path = _dump_instance(exc, args.dump_dir)
        print(f"internal impossible state: {exc}; instance written to {path}", file=sys.stderr)
        return EXIT_IMPOSSIBLE
    if args.format == "json":
        print(json.dumps(report, sort_keys=True, indent=2), file=stdout)
    else:
        print(_render_text(args.command, report), file=stdout)
    return EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
