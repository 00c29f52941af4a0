"""Command-line entry point.

Thin client over the service handlers: each subcommand parses flags into a
request model, runs the handler in-process, and renders the response as
text, JSON, or CSV. Data goes to standard output or ``--out``; failures
print ``error[Code]: message`` to standard error and exit 1; usage problems
exit 2 via argparse.
"""

import argparse
import sys

from .errors import IoError, StabgraphError
from .harness import render_report, verify_conjecture
from .service import handlers
from .service.models import BoundaryIn, ContactIn, EnumerateIn, GraphIn

PROG = "stabgraph"


def _target_arg(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"target must be 'a,b', got {text!r}")
    try:
        return (int(parts[0]), int(parts[1]))
    except ValueError:
        raise argparse.ArgumentTypeError(f"target parts must be integers, got {text!r}")


def _t_list_arg(text: str) -> list[str]:
    items = [part.strip() for part in text.split(",") if part.strip()]
    if not items:
        raise argparse.ArgumentTypeError("empty t list")
    return items


def _add_graph_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--graph", metavar="PATH", help="edge-list file, or - for stdin")
    sub.add_argument("--g6", metavar="STRING", help="graph6 line")
    sub.add_argument("--t", metavar="P/Q", help="override the weight t")


def _add_output_flags(sub: argparse.ArgumentParser, formats: tuple[str, ...]) -> None:
    sub.add_argument("--format", choices=formats, default=formats[0])
    sub.add_argument("--out", metavar="PATH", help="write data here instead of stdout")


def _graph_input(args: argparse.Namespace, parser: argparse.ArgumentParser) -> GraphIn:
    if (args.graph is None) == (args.g6 is None):
        parser.error("give exactly one of --graph and --g6")
    edge_list = None
    if args.graph is not None:
        if args.graph == "-":
            edge_list = sys.stdin.read()
        else:
            try:
                with open(args.graph, "r", encoding="utf-8") as fh:
                    edge_list = fh.read()
            except OSError as exc:
                raise IoError(f"cannot read {args.graph}: {exc}")
    return GraphIn(edge_list=edge_list, g6=args.g6, t=args.t)


def _json_dump(model) -> str:
    return model.model_dump_json(indent=2) + "\n"


def _cmd_construct(args, parser) -> str:
    body = handlers.handle_construct(_graph_input(args, parser))
    if args.format == "json":
        return _json_dump(body)
    return (
        f"n = {body.n}\n"
        f"t = {body.t}\n"
        f"class = {body.classification}\n"
        f"f = ({body.f_num}) / ({body.f_den})\n"
        f"q = {body.q}\n"
        f"p = {body.p}\n"
    )


def _cmd_contact(args, parser) -> str:
    req = ContactIn(
        graph=_graph_input(args, parser),
        target=args.target,
        oracle=args.oracle,
        dump_s=args.dump_s,
        seed=args.seed,
    )
    body = handlers.handle_contact(req)
    if args.format == "json":
        return _json_dump(body)
    lines = [f"K={body.order}"]
    if body.oracle_order is not None:
        lines.append(f"oracle K={body.oracle_order}")
    if body.s is not None:
        lines.append(f"s = {body.s}")
    return "\n".join(lines) + "\n"


def _cmd_boundary(args, parser) -> str:
    req = BoundaryIn(graph=_graph_input(args, parser), resolution=args.scan_resolution)
    body = handlers.handle_boundary(req)
    if args.format == "json":
        return _json_dump(body)
    lines = ["tau1_re,tau1_im,tau2_re,tau2_im,exact"]
    for pt in body.points:
        flag = "true" if pt.exact else "false"
        lines.append(
            f"{pt.tau1_re!r},{pt.tau1_im!r},{pt.tau2_re!r},{pt.tau2_im!r},{flag}"
        )
    return "\n".join(lines) + "\n"


def _cmd_paths(args, parser) -> str:
    body = handlers.handle_paths(args.n)
    if args.format == "json":
        return _json_dump(body)
    return (
        f"path_det = {body.path_det}\n"
        f"path_det_reversed = {body.path_det_reversed}\n"
        f"K={body.order}\n"
        f"s = {body.s}\n"
    )


def _cmd_enumerate(args, parser) -> str:
    body = handlers.handle_enumerate(
        EnumerateIn(n=args.n, connected_only=args.connected_only)
    )
    if args.format == "json":
        return _json_dump(body)
    if args.format == "csv":
        lines = ["canonical_id,edges,g6"]
        lines.extend(f"{c.canonical_id},{c.edges},{c.g6}" for c in body.classes)
        return "\n".join(lines) + "\n"
    lines = [f"{c.canonical_id}\t{c.g6}\t{c.edges}" for c in body.classes]
    lines.append(f"count = {body.count}")
    return "\n".join(lines) + "\n"


def _cmd_verify(args, parser) -> str:
    samples = [handlers.parse_t(s) for s in args.t]
    rows = list(verify_conjecture(args.nmax, samples, workers=args.workers))
    fmt = "json" if args.format == "json" else "csv"
    return render_report(rows, format=fmt)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=PROG,
        description="Exact pipeline from colored graphs to two-variable "
        "stable polynomials, boundary zeros, and contact orders.",
    )
    subs = parser.add_subparsers(dest="subcommand", required=True)

    sub = subs.add_parser("construct", help="print f, q, p for a graph")
    _add_graph_flags(sub)
    _add_output_flags(sub, ("text", "json"))
    sub.set_defaults(func=_cmd_construct)

    sub = subs.add_parser("contact", help="contact order at a boundary target")
    _add_graph_flags(sub)
    sub.add_argument("--target", type=_target_arg, default=(-1, 1), metavar="A,B")
    sub.add_argument("--oracle", action="store_true", help="also run the numeric oracle")
    sub.add_argument("--dump-s", action="store_true", help="print the pairing polynomial")
    sub.add_argument("--seed", type=int, default=7, help="oracle retry seed")
    _add_output_flags(sub, ("text", "json"))
    sub.set_defaults(func=_cmd_contact)

    sub = subs.add_parser("boundary", help="scan the torus for zeros of p")
    _add_graph_flags(sub)
    sub.add_argument("--scan-resolution", type=int, default=256, metavar="N")
    _add_output_flags(sub, ("csv", "json"))
    sub.set_defaults(func=_cmd_boundary)

    sub = subs.add_parser("paths", help="path-graph determinants and contact report")
    sub.add_argument("--n", type=int, required=True)
    _add_output_flags(sub, ("text", "json"))
    sub.set_defaults(func=_cmd_paths)

    sub = subs.add_parser("enumerate", help="canonical graph classes for one n")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--connected-only", action="store_true")
    _add_output_flags(sub, ("text", "csv", "json"))
    sub.set_defaults(func=_cmd_enumerate)

    sub = subs.add_parser("verify", help="conjecture sweep report")
    sub.add_argument("--nmax", type=int, required=True)
    sub.add_argument("--t", type=_t_list_arg, default=["1/4", "1/2"], metavar="LIST")
    sub.add_argument("--workers", type=int, default=None)
    _add_output_flags(sub, ("csv", "json"))
    sub.set_defaults(func=_cmd_verify)

    return parser


def _glue_target(argv: list[str]) -> list[str]:
    """Join '--target -1,1' into '--target=-1,1' so the dash is not a flag."""
    out = []
    tokens = iter(argv)
    for token in tokens:
        if token == "--target":
            value = next(tokens, "")
            out.append(f"--target={value}")
        else:
            out.append(token)
    return out


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(_glue_target(sys.argv[1:] if argv is None else argv))
    try:
        text = args.func(args, parser)
        if args.out is not None:
            try:
                with open(args.out, "w", encoding="utf-8", newline="") as fh:
                    fh.write(text)
            except OSError as exc:
                raise IoError(f"cannot write {args.out}: {exc}")
        else:
            sys.stdout.write(text)
        return 0
    except StabgraphError as exc:
        print(f"error[{exc.code}]: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
