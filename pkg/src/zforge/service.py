"""HTTP service exposing bounds, witnesses, GDDs, and the oracle.

The CLI drives this app in-process through an ASGI transport by default,
so the same request/response schema serves both local and remote use.
All numbers are exact: integers stay integers and rationals are
rendered as "p/q" strings, so responses are byte-stable across runs.

Failures use a uniform body {"kind": ..., "detail": ...} where kind is
one of "verification", "infeasible", "out-of-range", "budget", "usage";
clients map these to exit codes without parsing prose.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, floor
from typing import Optional

from fastapi import FastAPI
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from zforge import bounds as bounds_mod
from zforge import oracle as oracle_mod
from zforge import witness as witness_mod
from zforge.bounds import BoundReport, BoundsRangeError, upper_bounds, z_value
from zforge.gdd import GddType, InadmissibleError, construct_4u2v, verify_gdd
from zforge.hypercore import Witness, witness_from_json, witness_to_json
from zforge.triangles import BudgetExhaustedError, InfeasibleError
from zforge.witness import ConstructionUnavailable

app = FastAPI(title="zforge", description="Exact Zarankiewicz values "
              "Z_{2,2}(m,n) with certified witness hypergraphs.")


class ServiceError(Exception):
    def __init__(self, kind: str, detail: str, status: int = 422) -> None:
        super().__init__(detail)
        self.kind = kind
        self.detail = detail
        self.status = status


@app.exception_handler(ServiceError)
async def _service_error(_, exc: ServiceError) -> JSONResponse:
    return JSONResponse(status_code=exc.status,
                        content={"kind": exc.kind, "detail": exc.detail})


@app.exception_handler(RequestValidationError)
async def _validation_error(_, exc: RequestValidationError) -> JSONResponse:
    return JSONResponse(status_code=422,
                        content={"kind": "usage", "detail": str(exc)})


def _frac(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


class BoundsOut(BaseModel):
    m: int
    n: int
    u_plus: str
    u_zero: str
    u_minus: str
    floor_plus: int
    floor_zero: int
    floor_minus: int
    roman_min: int
    regime: str
    decrement: int
    z: Optional[int]
    asymptotic: bool


def _bounds_out(r: BoundReport) -> BoundsOut:
    return BoundsOut(m=r.m, n=r.n, u_plus=_frac(r.u_plus),
                     u_zero=_frac(r.u_zero), u_minus=_frac(r.u_minus),
                     floor_plus=r.floor_plus, floor_zero=r.floor_zero,
                     floor_minus=r.floor_minus, roman_min=r.roman_min,
                     regime=r.regime, decrement=r.decrement, z=r.z,
                     asymptotic=r.asymptotic)


@app.get("/bounds", response_model=BoundsOut)
def get_bounds(m: int, n: int) -> BoundsOut:
    try:
        return _bounds_out(upper_bounds(m, n))
    except ValueError as exc:
        raise ServiceError("usage", str(exc))


@app.get("/z", response_model=BoundsOut)
def get_z(m: int, n: int, assume_large: bool = False) -> BoundsOut:
    try:
        return _bounds_out(z_value(m, n, assume_large))
    except ValueError as exc:
        raise ServiceError("usage", str(exc))


class WitnessOut(BaseModel):
    m: int
    n: int
    z: int
    construction: str
    seed: Optional[int]
    edges: list[list[int]]
    document: str  # the canonical byte-exact witness file content


def _witness_out(w: Witness) -> WitnessOut:
    doc = witness_to_json(w)
    canon = w.hypergraph.canonical()
    return WitnessOut(m=w.m, n=w.n, z=w.z, construction=w.construction,
                      seed=w.seed, edges=[list(e) for e in canon.edges],
                      document=doc)


class ConstructIn(BaseModel):
    m: int
    n: int
    seed: int = 0
    budget: Optional[int] = None


@app.post("/construct", response_model=WitnessOut)
def post_construct(req: ConstructIn) -> WitnessOut:
    try:
        w = witness_mod.construct(req.m, req.n, req.seed, req.budget)
    except BudgetExhaustedError as exc:
        raise ServiceError("budget", str(exc))
    except (BoundsRangeError, ConstructionUnavailable) as exc:
        raise ServiceError("out-of-range", str(exc))
    except (InadmissibleError, InfeasibleError) as exc:
        raise ServiceError("infeasible", str(exc))
    except ValueError as exc:
        raise ServiceError("usage", str(exc))
    return _witness_out(w)


class VerifyIn(BaseModel):
    document: str


class VerifyOut(BaseModel):
    passed: bool
    failures: list[str]
    m: Optional[int] = None
    n: Optional[int] = None
    z: Optional[int] = None
    formula_z: Optional[int] = None
    matches_formula: Optional[bool] = None


@app.post("/verify", response_model=VerifyOut)
def post_verify(req: VerifyIn) -> VerifyOut:
    try:
        w = witness_from_json(req.document)
    except (ValueError, TypeError) as exc:
        return VerifyOut(passed=False, failures=[f"unreadable witness: {exc}"])
    report = w.verify()
    formula = z_value(w.m, w.n, assume_large=True)
    matches = formula.z == w.z if formula.z is not None else None
    return VerifyOut(passed=report.passed, failures=list(report.failures),
                     m=w.m, n=w.n, z=w.z, formula_z=formula.z,
                     matches_formula=matches)


class GddIn(BaseModel):
    type: str
    seed: int = 0


class GddOut(BaseModel):
    type: str
    m: int
    groups: list[list[int]]
    triples: list[list[int]]


@app.post("/gdd", response_model=GddOut)
def post_gdd(req: GddIn) -> GddOut:
    try:
        t = GddType.parse(req.type)
    except ValueError as exc:
        raise ServiceError("usage", str(exc))
    counts = dict(t.parts)
    u, v = counts.pop(4, 0), counts.pop(2, 0)
    if counts:
        raise ServiceError("infeasible",
                           f"only group sizes 4 and 2 are constructible, "
                           f"got {t}")
    try:
        design = construct_4u2v(u, v, req.seed)
    except InadmissibleError as exc:
        raise ServiceError("infeasible", str(exc))
    except BudgetExhaustedError as exc:
        raise ServiceError("budget", str(exc))
    check = verify_gdd(design, t)
    if not check.passed:
        raise ServiceError("verification", "; ".join(check.failures), 500)
    return GddOut(type=str(t), m=design.m,
                  groups=[list(g) for g in design.groups],
                  triples=[list(b) for b in design.triples])


class OracleIn(BaseModel):
    m: int
    n: int
    budget: Optional[int] = None


class OracleOut(BaseModel):
    m: int
    n: int
    optimum: int
    nodes_expanded: int
    prunes_by_bound: int
    edges: list[list[int]]


@app.post("/oracle", response_model=OracleOut)
def post_oracle(req: OracleIn) -> OracleOut:
    try:
        stats = oracle_mod.exact_z(req.m, req.n, req.budget)
    except oracle_mod.OracleRangeError as exc:
        raise ServiceError("out-of-range", str(exc))
    except oracle_mod.OracleBudgetError as exc:
        raise ServiceError("budget", str(exc))
    return OracleOut(m=req.m, n=req.n, optimum=stats.optimum,
                     nodes_expanded=stats.nodes_expanded,
                     prunes_by_bound=stats.prunes_by_bound,
                     edges=[list(e) for e in stats.optimal_witness.edges])


class TableRow(BaseModel):
    m: int
    n: int
    regime: str
    z: Optional[int]
    u_plus_floor: int
    u_zero_floor: int
    u_minus_floor: int
    decrement: int


class TableOut(BaseModel):
    rows: list[TableRow]


def _selected_n(m: int) -> list[int]:
    """Representative n per regime: every boundary and one interior point."""
    c = comb(m, 2)
    picks = set()
    a_lo, a_hi = bounds_mod.above_range(m)
    picks.update({a_lo, a_lo + 1, min(floor(Fraction(c, 3) + Fraction(m, 3)), a_hi),
                  (a_lo + a_hi) // 2, a_hi})
    b_lo, b_hi = bounds_mod.below_range(m)
    if b_lo <= b_hi:
        boundary = floor(Fraction(c, 3) - Fraction(m, 4))
        picks.update({b_lo, b_hi, (b_lo + b_hi) // 2})
        if b_lo <= boundary <= b_hi:
            picks.update({boundary, min(boundary + 1, b_hi)})
    return sorted(p for p in picks if 1 <= p <= c)


@app.get("/table", response_model=TableOut)
def get_table(m_from: int, m_to: int,
              regime: Optional[str] = None) -> TableOut:
    if not 1 <= m_from <= m_to <= 2000:
        raise ServiceError("usage",
                           f"need 1 <= m_from <= m_to <= 2000, "
                           f"got {m_from}..{m_to}")
    rows = []
    for m in range(max(m_from, 3), m_to + 1):
        for n in _selected_n(m):
            r = z_value(m, n, assume_large=True)
            if regime is not None and r.regime != regime:
                continue
            rows.append(TableRow(m=m, n=n, regime=r.regime, z=r.z,
                                 u_plus_floor=r.floor_plus,
                                 u_zero_floor=r.floor_zero,
                                 u_minus_floor=r.floor_minus,
                                 decrement=r.decrement))
    return TableOut(rows=rows)
