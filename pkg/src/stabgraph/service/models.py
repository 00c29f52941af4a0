"""Request and response bodies for the HTTP surface.

Every numeric payload field is text in canonical form (exact rationals as
"p/q", polynomials via their .text() rendering) so responses are stable
across runs and safe to diff.
"""

from pydantic import BaseModel


class GraphIn(BaseModel):
    """One graph, given as edge-list text or a graph6 line, with optional t."""

    edge_list: str | None = None
    g6: str | None = None
    t: str | None = None


class ConstructOut(BaseModel):
    n: int
    t: str
    classification: str
    f_num: str
    f_den: str
    q: str
    p: str


class ContactIn(BaseModel):
    graph: GraphIn
    target: tuple[int, int] = (-1, 1)
    oracle: bool = False
    dump_s: bool = False
    seed: int = 7


class ContactOut(BaseModel):
    target: tuple[int, int]
    order: int
    oracle_order: int | None = None
    s: str | None = None


class BoundaryIn(BaseModel):
    graph: GraphIn
    resolution: int = 256


class BoundaryPointOut(BaseModel):
    tau1_re: float
    tau1_im: float
    tau2_re: float
    tau2_im: float
    exact: bool


class BoundaryOut(BaseModel):
    points: list[BoundaryPointOut]


class PathsOut(BaseModel):
    n: int
    path_det: str
    path_det_reversed: str
    order: int
    s: str


class EnumerateIn(BaseModel):
    n: int
    connected_only: bool = False


class GraphClassOut(BaseModel):
    canonical_id: str
    edges: str
    g6: str


class EnumerateOut(BaseModel):
    n: int
    count: int
    classes: list[GraphClassOut]


class VerifyIn(BaseModel):
    n_max: int = 5
    t: list[str] = ["1/4", "1/2"]
    workers: int | None = None


class TResultOut(BaseModel):
    t: str
    Kt: int | None
    matcht: bool | None


class VerifyRowOut(BaseModel):
    n: int
    canonical_id: str
    edges: str
    ell: int | None
    K0: int | None
    match0: bool | None
    t_results: list[TResultOut]
    micros: int
    error: str | None


class VerifyOut(BaseModel):
    n_max: int
    rows: list[VerifyRowOut]
    mismatches: int
