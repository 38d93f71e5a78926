"""FastAPI service wrapping the digit arithmetic.

Each endpoint mirrors one CLI subcommand.  Domain errors become HTTP
400 with the same message the CLI would print; malformed request bodies
stay 422 as usual for FastAPI.
"""
from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..crt import idempotents
from ..digits import DigitExpansion
from ..errors import GadicError
from ..hensel import gadic_roots
from ..logarithm import log_gadic
from ..notation import parse_literal, render_default, render_dotted, render_tail
from ..notebook import run_notebook
from ..polynomials import IntPolynomial
from ..roots import quadratic_periods, sqrt_binomial, sqrt_hensel
from . import schemas

app = FastAPI(
    title="gadic",
    version=__version__,
    description="Truncated g-adic arithmetic and the 1800 notebook recomputation.",
)


@app.exception_handler(GadicError)
async def domain_error(request: Request, exc: GadicError) -> JSONResponse:
    return JSONResponse(status_code=400, content={"detail": str(exc)})


def _render(x: DigitExpansion, fmt: str | None) -> str:
    if fmt == "dotted":
        return render_dotted(x)
    if fmt == "tail":
        return render_tail(x)
    return render_default(x)


@app.get("/health", response_model=schemas.HealthResponse)
def health() -> schemas.HealthResponse:
    return schemas.HealthResponse(name="gadic", version=__version__)


@app.post("/sqrt", response_model=schemas.SqrtResponse)
def sqrt(req: schemas.SqrtRequest) -> schemas.SqrtResponse:
    if req.method == "binomial":
        principal = sqrt_binomial(req.a, req.base, req.prec)
        negated = -principal
    else:
        principal, negated = sqrt_hensel(req.a, req.base, req.prec)
    return schemas.SqrtResponse(
        principal=_render(principal, req.format),
        negated=_render(negated, req.format),
    )


@app.post("/hensel", response_model=schemas.HenselResponse)
def hensel(req: schemas.HenselRequest) -> schemas.HenselResponse:
    roots = gadic_roots(IntPolynomial.from_string(req.poly), req.base, req.prec)
    return schemas.HenselResponse(
        roots=[_render(lr.root, req.format) for lr in roots],
        seeds=[lr.residue_seed for lr in roots],
    )


@app.post("/idempotents", response_model=schemas.IdempotentsResponse)
def idem(req: schemas.IdempotentsRequest) -> schemas.IdempotentsResponse:
    out = idempotents(req.base, req.prec)
    return schemas.IdempotentsResponse(
        idempotents=[_render(e, req.format) for e in out]
    )


@app.post("/periods", response_model=schemas.PeriodsResponse)
def periods(req: schemas.PeriodsRequest) -> schemas.PeriodsResponse:
    pair = quadratic_periods(req.base, req.prec)
    return schemas.PeriodsResponse(
        a=_render(pair.a, req.format), b=_render(pair.b, req.format)
    )


@app.post("/log", response_model=schemas.LogResponse)
def log(req: schemas.LogRequest) -> schemas.LogResponse:
    prec = req.prec if req.prec is not None else 7
    x = parse_literal(req.x, req.base, prec)
    if req.prec is not None and x.precision > req.prec:
        x = x.truncate(req.prec)
    value = log_gadic(x)
    return schemas.LogResponse(
        value=_render(value, req.format), precision=value.precision
    )


@app.post("/convert", response_model=schemas.ConvertResponse)
def convert(req: schemas.ConvertRequest) -> schemas.ConvertResponse:
    x = parse_literal(req.literal, req.base, req.prec)
    if req.to == "integer":
        return schemas.ConvertResponse(result=str(x.to_integer()))
    if req.to == "dotted":
        return schemas.ConvertResponse(result=render_dotted(x))
    return schemas.ConvertResponse(result=render_tail(x))


@app.get("/notebook", response_model=schemas.NotebookResponse)
def notebook(prec_override: int | None = None) -> schemas.NotebookResponse:
    report = run_notebook(prec_override)
    return schemas.NotebookResponse(
        version=report.version,
        precision_override=report.precision_override,
        entries=[
            schemas.NotebookEntry(
                label=e.label,
                citation=e.citation,
                expected=e.expected,
                computed=e.computed,
                status=e.status,
                corrected=e.corrected,
            )
            for e in report.entries
        ],
        passed=report.passed,
        failed=report.failed,
        discrepancies=report.discrepancies,
        ok=report.ok,
    )
