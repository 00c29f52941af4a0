"""Pure request handlers shared by the HTTP app and the CLI.

Each handler takes a request model (or plain arguments), runs the core
pipeline in-process, and returns a response model. Validation failures and
computational errors surface as stabgraph errors; the callers map those to
HTTP status or exit codes.
"""

from fractions import Fraction

from ..boundary import circle_scan
from ..contact import contact_order, level_set_oracle, path_det, path_det_reversed
from ..construct import f_of_graph, rif_of_graph
from ..errors import InvalidT, PreconditionViolated
from ..graphcore import (
    ColoredGraph,
    canonical_id,
    enumerate_graphs,
    is_connected_1n,
    parse_edge_list,
    parse_graph6,
    path_graph,
    to_graph6,
)
from ..harness import verify_conjecture
from .models import (
    BoundaryIn,
    BoundaryOut,
    BoundaryPointOut,
    ConstructOut,
    ContactIn,
    ContactOut,
    EnumerateIn,
    EnumerateOut,
    GraphClassOut,
    GraphIn,
    PathsOut,
    VerifyIn,
    VerifyOut,
    VerifyRowOut,
)


def parse_t(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise InvalidT(f"bad rational {text!r}")


def resolve_graph(body: GraphIn) -> ColoredGraph:
    """Build the graph from exactly one input source, applying the t override."""
    if (body.edge_list is None) == (body.g6 is None):
        raise PreconditionViolated("give exactly one of edge_list and g6")
    if body.edge_list is not None:
        g = parse_edge_list(body.edge_list)
    else:
        g = parse_graph6(body.g6.strip())
    if body.t is not None:
        g = g.with_t(parse_t(body.t))
    return g


def handle_construct(body: GraphIn) -> ConstructOut:
    g = resolve_graph(body)
    f = f_of_graph(g)
    pair = rif_of_graph(g)
    return ConstructOut(
        n=g.n,
        t=str(g.t),
        classification=is_connected_1n(g).value,
        f_num=f.num.text(),
        f_den=f.den.text(),
        q=pair.q.text(),
        p=pair.p.text(),
    )


def handle_contact(req: ContactIn) -> ContactOut:
    g = resolve_graph(req.graph)
    report = contact_order(g, req.target)
    oracle = None
    if req.oracle:
        oracle = level_set_oracle(g, req.target, seed=req.seed)
    return ContactOut(
        target=req.target,
        order=report.order,
        oracle_order=oracle,
        s=report.pairing.text() if req.dump_s else None,
    )


def handle_boundary(req: BoundaryIn) -> BoundaryOut:
    pair = rif_of_graph(resolve_graph(req.graph))
    points = []
    for pt in circle_scan(pair, resolution=req.resolution):
        tau1, tau2 = pt.as_complex()
        points.append(
            BoundaryPointOut(
                tau1_re=tau1.real,
                tau1_im=tau1.imag,
                tau2_re=tau2.real,
                tau2_im=tau2.imag,
                exact=pt.exact,
            )
        )
    return BoundaryOut(points=points)


def handle_paths(n: int) -> PathsOut:
    if n < 2:
        raise PreconditionViolated(f"path report needs n >= 2, got {n}")
    report = contact_order(path_graph(n), (-1, 1))
    return PathsOut(
        n=n,
        path_det=path_det(n).text(),
        path_det_reversed=path_det_reversed(n).text(),
        order=report.order,
        s=report.pairing.text(),
    )


def handle_enumerate(req: EnumerateIn) -> EnumerateOut:
    classes = [
        GraphClassOut(canonical_id=canonical_id(g), edges=g.edge_text(), g6=to_graph6(g))
        for g in enumerate_graphs(req.n, require_connected_1n=req.connected_only)
    ]
    return EnumerateOut(n=req.n, count=len(classes), classes=classes)


def handle_verify(req: VerifyIn) -> VerifyOut:
    samples = [parse_t(s) for s in req.t]
    rows = list(verify_conjecture(req.n_max, samples, workers=req.workers))
    mismatches = sum(
        1
        for r in rows
        if r.error is not None
        or r.match0 is False
        or any(res.matcht is False for res in r.t_results)
    )
    return VerifyOut(
        n_max=req.n_max,
        rows=[VerifyRowOut.model_validate(r.to_dict()) for r in rows],
        mismatches=mismatches,
    )
