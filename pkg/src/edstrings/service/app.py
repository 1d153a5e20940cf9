"""FastAPI service wrapping the comparison library.

Every endpoint parses its EDS payloads, calls one library function, and
returns a typed response; parse problems map to 400, refused budgets to 422.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import acronym as acronym_mod
from .. import edsm as edsm_mod
from .. import generate, intersect, similarity, unary
from ..core import CapExceeded, EDString, ParseError, parse_eds, serialize_eds
from . import schemas


def _parse(text: str, name: str) -> EDString:
    try:
        return parse_eds(text)
    except (ParseError, ValueError) as exc:
        raise HTTPException(status_code=400, detail=f"{name}: {exc}") from exc


def create_app() -> FastAPI:
    app = FastAPI(title="edstrings", version="0.1.0")

    @app.get("/")
    def root() -> dict:
        return {"service": "edstrings", "status": "ok"}

    @app.post("/intersect", response_model=schemas.IntersectResponse,
              response_model_exclude_none=True)
    def intersect_endpoint(req: schemas.IntersectRequest):
        t1, t2 = _parse(req.t1, "t1"), _parse(req.t2, "t2")
        if req.mode == "decide":
            return schemas.IntersectResponse(
                answer=intersect.intersect_decide(t1, t2))
        if req.mode == "count":
            count = intersect.count_matching_pairs(t1, t2)
            return schemas.IntersectResponse(answer=count > 0, count=count)
        fn = {"witness": intersect.witness,
              "shortest": intersect.shortest_witness,
              "longest": intersect.longest_witness}[req.mode]
        result = fn(t1, t2)
        return schemas.IntersectResponse(
            answer=result.found, witness=result.witness, length=result.length)

    @app.post("/matching-statistics",
              response_model=schemas.MatchingStatisticsResponse)
    def ms_endpoint(req: schemas.PairRequest):
        t1, t2 = _parse(req.t1, "t1"), _parse(req.t2, "t2")
        return schemas.MatchingStatisticsResponse(
            ms=similarity.matching_statistics(t1, t2))

    @app.post("/longest-common-substring",
              response_model=schemas.CommonStringResponse)
    def lcs_endpoint(req: schemas.PairRequest):
        t1, t2 = _parse(req.t1, "t1"), _parse(req.t2, "t2")
        length, witness = similarity.longest_common_substring(t1, t2)
        return schemas.CommonStringResponse(length=length, witness=witness)

    @app.post("/longest-common-subsequence",
              response_model=schemas.CommonStringResponse)
    def lcseq_endpoint(req: schemas.PairRequest):
        t1, t2 = _parse(req.t1, "t1"), _parse(req.t2, "t2")
        try:
            length, witness = similarity.longest_common_subsequence(t1, t2)
        except CapExceeded as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc
        return schemas.CommonStringResponse(length=length, witness=witness)

    @app.post("/edsm", response_model=schemas.EdsmResponse,
              response_model_exclude_none=True)
    def edsm_endpoint(req: schemas.EdsmRequest):
        pattern = _parse(req.pattern, "pattern")
        text = _parse(req.text, "text")
        if req.mode == "decide":
            return schemas.EdsmResponse(
                found=edsm_mod.doubly_edsm(pattern, text, mode="decide"))
        report = edsm_mod.doubly_edsm(pattern, text, mode="report")
        return schemas.EdsmResponse(
            found=bool(report),
            end_segments=list(report.end_segments),
            start_segments=list(report.start_segments))

    @app.post("/approx/intersect", response_model=schemas.ApproxResponse,
              response_model_exclude_none=True)
    def approx_endpoint(req: schemas.ApproxRequest):
        t1, t2 = _parse(req.t1, "t1"), _parse(req.t2, "t2")
        try:
            if req.k is None:
                result = edsm_mod.approx_intersect(t1, t2, req.metric)
            else:
                result = edsm_mod.approx_intersect_bounded(
                    t1, t2, req.metric, req.k)
        except CapExceeded as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc
        return schemas.ApproxResponse(
            finite=result.finite, distance=result.distance, pair=result.pair)

    @app.post("/approx/edsm", response_model=schemas.ApproxResponse,
              response_model_exclude_none=True)
    def approx_edsm_endpoint(req: schemas.ApproxEdsmRequest):
        pattern = _parse(req.pattern, "pattern")
        text = _parse(req.text, "text")
        try:
            result, report = edsm_mod.approx_edsm(pattern, text, req.metric,
                                                  k=req.k)
        except CapExceeded as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc
        return schemas.ApproxResponse(
            finite=result.finite, distance=result.distance, pair=result.pair,
            end_segments=list(report.end_segments),
            start_segments=list(report.start_segments))

    @app.post("/unary", response_model=schemas.UnaryResponse)
    def unary_endpoint(req: schemas.UnaryRequest):
        try:
            t1 = unary.parse_compact(req.t1)
            t2 = unary.parse_compact(req.t2)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc
        lengths = unary.unary_intersect(t1, t2)
        return schemas.UnaryResponse(nonempty=bool(lengths), lengths=lengths)

    @app.post("/acronym", response_model=schemas.AcronymResponse)
    def acronym_endpoint(req: schemas.AcronymRequest):
        try:
            inst = acronym_mod.AcronymInstance(
                tuple(req.dictionary), tuple(req.words),
                tuple(req.minlens) if req.minlens else ())
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc
        found = acronym_mod.acronym_report(inst)
        return schemas.AcronymResponse(answer=bool(found),
                                       acronyms=sorted(found))

    @app.post("/generate/random",
              response_model=schemas.GenerateRandomResponse)
    def generate_random_endpoint(req: schemas.GenerateRandomRequest):
        eds = generate.random_eds(
            req.seed, n_range=(req.min_segments, req.max_segments),
            seg_size_range=(req.min_variants, req.max_variants),
            len_range=(req.min_length, req.max_length),
            alphabet=req.alphabet, eps_prob=req.eps_prob)
        return schemas.GenerateRandomResponse(eds=serialize_eds(eds))

    @app.post("/generate/ov", response_model=schemas.GenerateOvResponse)
    def generate_ov_endpoint(req: schemas.GenerateOvRequest):
        try:
            t1, t2 = generate.ov_to_edsi(req.vectors)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc
        return schemas.GenerateOvResponse(
            t1=serialize_eds(t1), t2=serialize_eds(t2))

    return app


app = create_app()
