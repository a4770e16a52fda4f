"""FastAPI service wrapping the core package.

One process holds the group, Kazhdan-Lusztig, and character caches, so
repeated queries against the same configuration reuse all previously
computed tables.  Errors map to HTTP 400 with a machine-readable code:
"usage" for bad inputs, "regime" for modular-character requests without
the regime flag.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import __version__
from ..charring import CharElem, dim, product, to_weight_basis, to_weyl_basis, translate
from ..klpoly import IntPoly
from ..lcf import RegimeError, RegimeViolationError
from ..rootdata import UnsupportedTypeError, build_root_system
from ..suites import get_calculator, get_group, get_kl_table, run_suite
from . import schemas

app = FastAPI(title="weylkit", version=__version__)


def _bad_request(code: str, message: str):
    raise HTTPException(status_code=400, detail={"code": code, "message": message})


def _group_of(params: schemas.SystemParams):
    try:
        return get_group(params.series, params.rank, params.p)
    except (UnsupportedTypeError, ValueError) as exc:
        _bad_request("usage", str(exc))


def _element_of(group, payload: schemas.ElementPayload):
    try:
        if payload.alcove is not None:
            return group.from_alcove(payload.alcove)
        if payload.word is not None:
            return group.from_word(payload.word)
    except ValueError as exc:
        _bad_request("usage", str(exc))
    _bad_request("usage", "element needs 'word' or 'alcove'")


def _char_payload(c: CharElem) -> schemas.CharPayload:
    return schemas.CharPayload(**c.to_payload())


@app.get("/health")
def health():
    return {"status": "ok", "version": __version__}


@app.post("/roots", response_model=schemas.RootsResponse)
def roots(req: schemas.RootsRequest):
    try:
        rs = build_root_system(req.series, req.rank)
    except UnsupportedTypeError as exc:
        _bad_request("usage", str(exc))
    return schemas.RootsResponse(
        series=rs.series,
        rank=rs.rank,
        cartan=[list(row) for row in rs.cartan],
        positive_roots=[list(r) for r in rs.positive_roots],
        coroots=[list(c) for c in rs.coroot_coords],
        coxeter_number=rs.coxeter_number,
        rho=list(rs.rho),
    )


@app.post("/elements", response_model=schemas.ElementsResponse)
def elements(req: schemas.ElementsRequest):
    group = _group_of(req.params)
    try:
        pool = (group.enumerate_dominant(req.max_len) if req.dominant_only
                else group.elements_up_to(req.max_len))
    except ValueError as exc:
        _bad_request("usage", str(exc))
    records = [
        schemas.ElementRecord(
            word=w.word_str,
            alcove=list(w.alcove),
            length=w.length,
            descents=sorted(w.right_descents()),
            dominant=group.is_dominant_element(w) if req.dominant_only else None,
        )
        for w in pool
    ]
    return schemas.ElementsResponse(count=len(records), elements=records)


@app.post("/descent", response_model=schemas.DescentResponse)
def descent(req: schemas.DescentRequest):
    group = _group_of(req.params)
    w = _element_of(group, req.element)
    return schemas.DescentResponse(
        word=w.word_str,
        alcove=list(w.alcove),
        length=w.length,
        descents=sorted(w.right_descents()),
    )


@app.post("/kl", response_model=schemas.KLResponse)
def kl(req: schemas.KLRequest):
    group = _group_of(req.params)
    y = _element_of(group, req.y)
    w = _element_of(group, req.w)
    table = get_kl_table(group)
    poly: IntPoly = table.kl_poly(y, w) if req.variant == "kl" else table.r_poly(y, w)
    return schemas.KLResponse(
        variant=req.variant,
        coeffs=list(poly.coeffs),
        degree=poly.degree,
        eval_one=poly.eval_at(1),
        eval_minus_one=poly.eval_at(-1),
    )


@app.post("/char", response_model=schemas.CharResponse)
def char(req: schemas.CharRequest):
    group = _group_of(req.params)
    rs = group.rs
    try:
        c = CharElem.make(rs, "weyl", {tuple(req.chi): 1})
        if req.times is not None:
            c = product(c, CharElem.make(rs, "weyl", {tuple(req.times): 1}))
        cw = to_weyl_basis(c)
    except ValueError as exc:
        _bad_request("usage", str(exc))
    return schemas.CharResponse(
        weyl=_char_payload(cw),
        weight=_char_payload(to_weight_basis(cw)),
        dim=dim(cw),
    )


@app.post("/translate", response_model=schemas.TranslateResponse)
def translate_endpoint(req: schemas.TranslateRequest):
    group = _group_of(req.params)
    rs = group.rs
    try:
        if req.char is not None:
            c = CharElem.from_payload(rs, req.char.model_dump())
        elif req.chi is not None:
            c = CharElem.make(rs, "weyl", {tuple(req.chi): 1})
        else:
            _bad_request("usage", "translate needs 'chi' or 'char'")
        result = translate(group, tuple(req.source), tuple(req.target), c)
    except ValueError as exc:
        _bad_request("usage", str(exc))
    return schemas.TranslateResponse(
        weyl=_char_payload(result),
        weight=_char_payload(to_weight_basis(result)),
        dim=dim(result),
    )


@app.post("/decompose", response_model=schemas.DecomposeResponse)
def decompose(req: schemas.DecomposeRequest):
    group = _group_of(req.params)
    calc = get_calculator(group, req.assume_lcf)
    try:
        gamma = tuple(req.weight)
        if not group.rs.is_dominant(gamma):
            raise ValueError(f"{gamma} is not dominant")
        mu, w = group.orbit_data(gamma)
        if not group.stabilizer(mu).is_regular:
            raise ValueError(f"{gamma} lies on a singular orbit; decompose needs a regular weight")
        report = calc.decompose(w, mu)
    except RegimeError as exc:
        _bad_request("regime", str(exc))
    except RegimeViolationError as exc:
        _bad_request("regime", str(exc))
    except ValueError as exc:
        _bad_request("usage", str(exc))
    return schemas.DecomposeResponse(
        report=report.to_dict(),
        coefficients=report.coefficients_payload(),
    )


@app.post("/verify/{suite}", response_model=schemas.VerifyResponse)
def verify(suite: str, req: schemas.VerifyRequest):
    try:
        report = run_suite(
            suite,
            series=req.params.series,
            rank=req.params.rank,
            p=req.params.p,
            max_len=req.max_len,
            box_radius=req.box_radius,
            base=req.base,
            lam=req.lam,
            mu=req.mu,
            nu=req.nu,
            assume_lcf=req.assume_lcf,
            jobs=req.jobs,
        )
    except RegimeError as exc:
        _bad_request("regime", str(exc))
    except RegimeViolationError as exc:
        _bad_request("regime", str(exc))
    except ValueError as exc:
        _bad_request("usage", str(exc))
    return schemas.VerifyResponse(ok=not report["violations"], report=report)


@app.post("/cache", response_model=schemas.CacheResponse)
def cache(req: schemas.CacheRequest):
    group = _group_of(req.params)
    table = get_kl_table(group)
    try:
        if req.action == "info":
            return schemas.CacheResponse(action="info", entries=table.size, path=req.path)
        if req.action == "clear":
            table.clear()
            return schemas.CacheResponse(action="clear", entries=0, path=req.path)
        if req.path is None:
            raise ValueError(f"cache action {req.action!r} needs a path")
        if req.action == "save":
            count = table.save(req.path)
        else:
            count = table.load(req.path)
        return schemas.CacheResponse(action=req.action, entries=count, path=req.path)
    except (OSError, ValueError) as exc:
        _bad_request("usage", str(exc))
