"""Decide X-planarity of 4-regular graphs with paired darts.

Exit codes: 0 X-planar (or success), 1 not X-planar, 2 input or usage
error, 3 internal invariant failure.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .core import (
    InternalError,
    XGraph,
    XGraphError,
    components,
    from_gauss_code,
    parse_certificate,
    parse_xgraph,
    serialize_xgraph,
    validate,
    verify_forbidden_pair,
)
from .embed import face_count, render_schematic
from .oracle import (
    CYCLES_MAX_V,
    ROTATIONS_MAX_V,
    generator_metadata,
    oracle_forbidden_pairs,
    oracle_rotations,
    random_xgraph,
)
from .pipeline import decide

PLANAR, NOT_PLANAR, USAGE, INTERNAL = 0, 1, 2, 3


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _graph(args: argparse.Namespace, strict: bool = True) -> XGraph:
    if args.gauss is not None:
        return from_gauss_code(args.gauss)
    if args.graph is None:
        raise XGraphError("give a .xg file or --gauss")
    return parse_xgraph(_read(args.graph), strict=strict)


def _emit(args: argparse.Namespace, text: str) -> None:
    if getattr(args, "output", None):
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_decide(args) -> int:
    g = _graph(args)
    verdict = decide(g, simplify=args.simplify)
    text = ""
    if args.tour:
        for i, part in enumerate(verdict.parts):
            text += f"# component {i}\n" + part.tour.format()
            if part.coloring is not None:
                text += part.coloring.format()
    _emit(args, text + verdict.format())
    return PLANAR if verdict.planar else NOT_PLANAR


def cmd_embed(args) -> int:
    verdict = decide(_graph(args))
    if not verdict.planar:
        print("not X-planar", file=sys.stderr)
        return NOT_PLANAR
    text = verdict.rotation().format() + "".join(f"f {n}\n" for n in verdict.face_counts())
    _emit(args, text)
    return PLANAR


def cmd_certify(args) -> int:
    g = _graph(args)
    if args.check:
        w1, w2, vertex = parse_certificate(_read(args.check))
        report = verify_forbidden_pair(w1, w2, g)
        if report.valid and vertex is not None and report.crossing != {vertex}:
            print(f"invalid: crossing vertex is {min(report.crossing)}, not {vertex}")
            return USAGE
        if not report.valid:
            print(f"invalid: {report.reason}")
            return USAGE
        print(f"valid crossing {min(report.crossing)}")
        return NOT_PLANAR
    verdict = decide(g, simplify=args.simplify)
    if verdict.planar:
        print("# X-planar: no certificate", file=sys.stderr)
        return PLANAR
    _emit(args, verdict.certificate().format())
    return NOT_PLANAR


def cmd_gauss(args) -> int:
    _emit(args, serialize_xgraph(from_gauss_code(" ".join(args.word))))
    return PLANAR


def cmd_oracle(args) -> int:
    g = _graph(args)
    parts = components(g)
    if args.method == "rotations":
        found = [oracle_rotations(c.graph, args.max_v or ROTATIONS_MAX_V) for c in parts]
        if any(r is None for r in found):
            _emit(args, "# not X-planar\n")
            return NOT_PLANAR
        text = "# X-planar\n"
        for c, r in zip(parts, found):
            text += f"# component {parts.index(c)} vertices {' '.join(map(str, c.vertex_map))}\n"
            text += r.format() + f"f {face_count(c.graph, r).count}\n"
        _emit(args, text)
        return PLANAR
    for c in parts:
        pair = oracle_forbidden_pairs(c.graph, args.max_v or CYCLES_MAX_V)
        if pair is not None:
            w1, w2 = (w.map_edges(c.edge_map) for w in pair)
            (vertex,) = verify_forbidden_pair(w1, w2, g).crossing
            _emit(args, f"# not X-planar\n{w1.format()}\n{w2.format()}\nx {vertex}\n")
            return NOT_PLANAR
    _emit(args, "# X-planar\n")
    return PLANAR


def cmd_gen(args) -> int:
    g = random_xgraph(args.letters, args.seed, args.shuffle)
    _emit(args, serialize_xgraph(g, generator_metadata(args.letters, args.seed, args.shuffle)))
    return PLANAR


def cmd_render(args) -> int:
    verdict = decide(_graph(args))
    if not verdict.planar:
        print("not X-planar; nothing to render", file=sys.stderr)
        return NOT_PLANAR
    g = verdict.graph
    r = verdict.rotation()
    faces = None
    if len(verdict.parts) == 1:
        faces = verdict.parts[0].faces
    _emit(args, render_schematic(g, r, faces))
    return PLANAR


def cmd_validate(args) -> int:
    problems = validate(_graph(args, strict=False))
    for p in problems:
        print(p)
    if problems:
        return USAGE
    print("ok")
    return PLANAR


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="xplanar", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_command(name: str, func, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        p.add_argument("graph", nargs="?", help=".xg file, or - for stdin")
        p.add_argument("--gauss", help="Gauss code instead of a file, e.g. 'a b a b'")
        p.add_argument("-o", "--output")
        p.set_defaults(func=func)
        return p

    p = graph_command("decide", cmd_decide, "embedding or certificate")
    p.add_argument("--simplify", action="store_true", help="make certificate cycles vertex-simple")
    p.add_argument("--tour", action="store_true", help="also dump tours and colorings")
    graph_command("embed", cmd_embed, "rotation system of an X-planar graph")
    p = graph_command("certify", cmd_certify, "emit or check a forbidden cycle pair")
    p.add_argument("--check", metavar="CERT", help="verify this certificate file instead")
    p.add_argument("--simplify", action="store_true")
    p = graph_command("oracle", cmd_oracle, "brute-force verdict")
    p.add_argument("--method", choices=("rotations", "cycles"), default="rotations")
    p.add_argument("--max-v", type=int, default=None)
    graph_command("render", cmd_render, "schematic SVG of the embedding")
    graph_command("validate", cmd_validate, "report structural problems")

    p = sub.add_parser("gauss", help="convert a Gauss code to .xg")
    p.add_argument("word", nargs="+")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gauss)
    p = sub.add_parser("gen", help="random X-graph from a random Gauss code")
    p.add_argument("--letters", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--shuffle", action="store_true", help="re-randomize every pairing")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else PLANAR
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except InternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return INTERNAL
    except (XGraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
