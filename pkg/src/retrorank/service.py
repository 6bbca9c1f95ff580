"""HTTP façade over an immutable SearchEngine: query, browse, evaluate.

All state is built before the server starts; request handling is read-only,
so identical requests return identical bodies (modulo the timing field).
"""

from __future__ import annotations

from pathlib import Path

from fastapi import FastAPI, HTTPException, Query
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel, Field

from .corpus import BugNotFoundError, get_bug
from .evalstats import (GoldsetError, ZeroVarianceError, goldset_entry_from_record,
                        report_dict, run_eval)
from .ranker import (PipelineConfig, SearchEngine, UnknownPresetError,
                     preset, replace_config)


class GoldRef(BaseModel):
    bug_id: str
    index: int


class GoldsetRecord(BaseModel):
    query_id: str
    query_text: str
    gold: list[GoldRef]


class EvalRequest(BaseModel):
    goldset: list[GoldsetRecord]
    configs: list[str] = Field(default=["vsm", "vsm+sa", "vsm+tr", "vsm+sa+tr"])
    alpha: float = 0.05
    top_m: int = 50


def parse_weights(raw: str) -> tuple[float, float, float]:
    """Parse a 'w_vsm,w_sa,w_tr' flag/parameter value."""
    parts = [p.strip() for p in raw.split(",")]
    if len(parts) != 3:
        raise ValueError(f"weights must be three comma-separated numbers, got {raw!r}")
    try:
        w1, w2, w3 = (float(p) for p in parts)
    except ValueError:
        raise ValueError(f"weights must be numeric, got {raw!r}") from None
    return (w1, w2, w3)


def resolve_config(name: str, weights: str | None = None,
                   k: int = 10, top_m: int = 50) -> PipelineConfig:
    """Preset name + optional weight override -> validated PipelineConfig."""
    parsed = parse_weights(weights) if weights else None
    return preset(name, weights=parsed, top_m=top_m, k=k)


def create_app(engine: SearchEngine, static_dir: str | Path | None = None,
               eval_query_cap: int = 500) -> FastAPI:
    """Build the API application around a prebuilt engine."""
    app = FastAPI(title="retrorank", version="0.1.0")

    @app.get("/api/health")
    def health() -> dict:
        return {
            "status": "ok",
            "bugs": len(engine.corpus.bugs),
            "resolved_comments": engine.corpus.resolved_comment_count,
            "indexed_comments": engine.index.doc_count,
            "terms": len(engine.index.doc_freq),
        }

    @app.get("/api/query")
    def query(q: str = Query(""), config: str = Query("vsm+sa+tr"),
              k: int = Query(10, ge=1), top_m: int = Query(50, ge=1),
              weights: str | None = Query(None)) -> dict:
        if not q.strip():
            raise HTTPException(status_code=400, detail="query must not be empty")
        try:
            pipeline = resolve_config(config, weights, k=k, top_m=top_m)
            return engine.query_response(q, pipeline)
        except (UnknownPresetError, ValueError) as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc

    @app.get("/api/bugs/{bug_id}")
    def bug_detail(bug_id: str) -> dict:
        try:
            bug = get_bug(engine.corpus, bug_id)
        except BugNotFoundError as exc:
            raise HTTPException(status_code=404, detail=str(exc)) from exc
        return {
            "id": bug.id,
            "title": bug.title,
            "description": bug.description,
            "status": bug.status,
            "comment_count": len(bug.comments),
        }

    @app.get("/api/bugs/{bug_id}/comments")
    def bug_comments(bug_id: str) -> dict:
        try:
            bug = get_bug(engine.corpus, bug_id)
        except BugNotFoundError as exc:
            raise HTTPException(status_code=404, detail=str(exc)) from exc
        return {
            "bug_id": bug.id,
            "title": bug.title,
            "status": bug.status,
            "comments": [
                {"index": c.index, "body": c.body,
                 "author": c.author, "timestamp": c.timestamp}
                for c in bug.comments
            ],
        }

    @app.post("/api/eval")
    def evaluate(request: EvalRequest) -> dict:
        if not request.goldset:
            raise HTTPException(status_code=400, detail="goldset must not be empty")
        if len(request.goldset) > eval_query_cap:
            raise HTTPException(
                status_code=413,
                detail=f"goldset exceeds the per-request cap of {eval_query_cap} queries",
            )
        try:
            goldset = [
                goldset_entry_from_record(record.model_dump(), where=f"goldset[{i}]")
                for i, record in enumerate(request.goldset)
            ]
            configs = [
                replace_config(resolve_config(name), top_m=request.top_m)
                for name in request.configs
            ]
            report = run_eval(engine.corpus, engine.lexicon, goldset, configs,
                              alpha=request.alpha, engine=engine)
        except (GoldsetError, UnknownPresetError, ValueError) as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc
        except ZeroVarianceError as exc:
            raise HTTPException(
                status_code=422,
                detail=f"degenerate configuration pair: {exc}",
            ) from exc
        return report_dict(report)

    if static_dir is not None:
        app.mount("/", StaticFiles(directory=str(static_dir), html=True), name="ui")
    return app
