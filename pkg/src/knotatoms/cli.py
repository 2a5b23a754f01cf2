"""Command line front end.

Exit codes: 0 success or minimal, 1 corpus mismatch, 2 parse error,
3 inconclusive certificate, 4 state-sum limit refusal.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from knotatoms.atom import atom_summary, build_atom
from knotatoms.bracket import LIMIT_ENV_VAR, StateSumTooLarge, default_limit, kauffman_bracket, span_bound_report
from knotatoms.corpus import CorpusEntry, load_corpus
from knotatoms.diagram import (
    Diagram,
    DiagramError,
    LongDiagram,
    ParseError,
    braid_closure,
    cable,
    component_count,
    connected_sum,
    is_classical,
    mirror,
    parse_braid,
    parse_gauss,
    parse_long_gauss,
    parse_pd,
    serialize_pd,
    writhe,
)
from knotatoms.minimality import certify_classical, certify_framed, certify_long

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_PARSE = 2
EXIT_INCONCLUSIVE = 3
EXIT_REFUSED = 4

FORMATS = ("auto", "pd", "gauss", "braid")


def detect_format(text: str) -> str:
    head = text.lstrip()[:2].upper()
    if head.startswith(("X", "PD")):
        return "pd"
    if head[:1] in ("O", "U"):
        return "gauss"
    return "braid"


def load_diagram(text: str, fmt: str = "auto") -> Diagram:
    """Parse ``text`` in the given format; raises :class:`ParseError`."""
    if fmt == "auto":
        if not text.strip():
            raise ParseError("empty input", text, 0)
        fmt = detect_format(text)
    try:
        if fmt == "pd":
            return parse_pd(text)
        if fmt == "gauss":
            return parse_gauss(text)
        if fmt == "braid":
            return braid_closure(parse_braid(text))
    except DiagramError as exc:
        raise ParseError(str(exc), text, 0) from exc
    raise ParseError(f"unknown format {fmt!r}", text, 0)


def load_long(text: str, fmt: str = "auto") -> LongDiagram:
    if fmt == "gauss" or (fmt == "auto" and text.strip() and detect_format(text) == "gauss"):
        try:
            return parse_long_gauss(text)
        except DiagramError as exc:
            raise ParseError(str(exc), text, 0) from exc
    return LongDiagram.cut(load_diagram(text, fmt))


def _read_input(arg: str) -> str:
    if arg == "-":
        return sys.stdin.read()
    path = Path(arg)
    if len(arg) < 256 and path.is_file():
        return path.read_text(encoding="utf-8")
    return arg


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def cmd_info(args) -> int:
    d = load_diagram(_read_input(args.input), args.format)
    report = {
        "n": d.n,
        "components": component_count(d),
        "knot": component_count(d) == 1,
        "classical": is_classical(d),
        "writhe": writhe(d),
        "pd": serialize_pd(d),
        "atom": atom_summary(build_atom(d)),
    }
    if args.json:
        print(_dump(report))
    else:
        for key in ("n", "components", "knot", "classical", "writhe", "pd"):
            print(f"{key}: {report[key]}")
        print("atom: " + _dump(report["atom"]))
    return EXIT_OK


def cmd_certify(args) -> int:
    text = _read_input(args.input)
    if args.category == "long":
        cert = certify_long(load_long(text, args.format), args.limit)
    else:
        d = load_diagram(text, args.format)
        certify = certify_classical if args.category == "classical" else certify_framed
        cert = certify(d, args.limit)
    print(cert.to_json())
    return EXIT_OK if cert.minimal else EXIT_INCONCLUSIVE


def cmd_bracket(args) -> int:
    d = load_diagram(_read_input(args.input), args.format)
    poly = kauffman_bracket(d, args.limit, workers=args.workers)
    report = span_bound_report(d, args.limit).to_dict()
    if args.json:
        print(_dump({"bracket": str(poly), **report}))
    else:
        print(f"bracket: {poly}")
        for key in ("span", "n", "chi", "bound", "equality"):
            print(f"{key}: {report[key]}")
    return EXIT_OK


def _emit_diagram(d: Diagram, args) -> int:
    if args.json:
        print(_dump({"n": d.n, "components": component_count(d), "pd": serialize_pd(d),
                     "labels": dict(d.labels)}))
    else:
        print(serialize_pd(d))
    return EXIT_OK


def cmd_cable(args) -> int:
    d = load_diagram(_read_input(args.input), args.format)
    return _emit_diagram(cable(d, args.k), args)


def cmd_mirror(args) -> int:
    return _emit_diagram(mirror(load_diagram(_read_input(args.input), args.format)), args)


def cmd_consum(args) -> int:
    d1 = load_diagram(_read_input(args.first), args.format)
    d2 = load_diagram(_read_input(args.second), args.format)
    arc1 = args.arc1 if d1.n else None
    arc2 = args.arc2 if d2.n else None
    return _emit_diagram(connected_sum(d1, arc1, d2, arc2), args)


def process_entry(entry: CorpusEntry, limit: int) -> dict:
    """Certify one corpus entry and compare against its expected values."""
    row = {"name": entry.name, "line": entry.line}
    if entry.error:
        return {**row, "status": "error", "error": entry.error}
    try:
        d = load_diagram(entry.code, entry.format or "auto")
    except ParseError as exc:
        return {**row, "status": "error", "error": str(exc)}
    cert = certify_classical(d, limit)
    measured = {"good": cert.good, "chi": cert.chi, "span": cert.span}
    mismatches = sorted(
        k for k, v in entry.expected.items()
        if k in measured and measured[k] is not None and measured[k] != v
    )
    return {
        **row,
        "n": cert.n,
        "knot": entry.knot,
        "verdict": cert.verdict,
        "reason": cert.reason,
        "good": cert.good,
        "chi": cert.chi,
        "span": cert.span,
        "mismatches": mismatches,
        "status": "mismatch" if mismatches else "ok",
    }


def run_batch(entries: list[CorpusEntry], limit: int, workers: int = 1) -> list[dict]:
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(lambda e: process_entry(e, limit), entries))
    return [process_entry(e, limit) for e in entries]


def cmd_batch(args) -> int:
    entries = load_corpus(args.corpus)
    rows = run_batch(entries, args.limit if args.limit is not None else default_limit(), args.workers)
    if args.json:
        print(_dump(rows))
    else:
        print(f"{'name':<20} {'n':>3} {'verdict':<18} {'good':<6} {'chi':>4} {'span':>5}  status")
        for r in rows:
            if r["status"] == "error":
                print(f"{r['name']:<20} {'':>3} {'':<18} {'':<6} {'':>4} {'':>5}  error: {r['error']}")
                continue
            span = "-" if r["span"] is None else r["span"]
            status = r["status"] + (f" ({', '.join(r['mismatches'])})" if r["mismatches"] else "")
            print(f"{r['name']:<20} {r['n']:>3} {r['verdict']:<18} {str(r['good']).lower():<6} "
                  f"{r['chi']:>4} {span:>5}  {status}")
    if any(r["status"] == "mismatch" for r in rows):
        return EXIT_MISMATCH
    if any(r["status"] == "error" for r in rows):
        return EXIT_PARSE
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="knotatoms", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, input_name="input"):
        if input_name:
            p.add_argument(input_name, help="diagram text, a file path, or - for stdin")
        p.add_argument("--format", choices=FORMATS, default="auto")
        p.add_argument("--json", action="store_true", help="emit JSON")
        p.add_argument("--limit", type=int, default=None,
                       help=f"state-sum crossing limit (default ${LIMIT_ENV_VAR} or {default_limit()})")

    p = sub.add_parser("info", help="crossings, components, classicality, writhe")
    common(p)
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("certify", help="minimality certificate as JSON")
    common(p)
    p.add_argument("--category", choices=("classical", "framed", "long"), default="classical")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("bracket", help="Kauffman bracket and span bound")
    common(p)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_bracket)

    p = sub.add_parser("batch", help="certify every entry of a corpus file")
    common(p, input_name=None)
    p.add_argument("--corpus", default=None, help="corpus file (default: bundled corpus)")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_batch)

    p = sub.add_parser("cable", help="blackboard k-cable as PD")
    common(p)
    p.add_argument("-k", type=int, default=2)
    p.set_defaults(func=cmd_cable)

    p = sub.add_parser("mirror", help="mirror diagram as PD")
    common(p)
    p.set_defaults(func=cmd_mirror)

    p = sub.add_parser("consum", help="connected sum as PD")
    common(p, input_name="first")
    p.add_argument("second")
    p.add_argument("--arc1", type=int, default=0, help="dart on the cut arc of the first diagram")
    p.add_argument("--arc2", type=int, default=0, help="dart on the cut arc of the second diagram")
    p.set_defaults(func=cmd_consum)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except DiagramError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except StateSumTooLarge as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
