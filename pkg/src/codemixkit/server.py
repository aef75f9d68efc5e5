"""HTTP API for the annotation UI and the agreement dashboard.

All endpoints live under ``/api/v1``. Reads may run concurrently; writes
are serialized by the store's writer lock. When a static asset directory is
configured, it is served at the root path so the single-page UI and the API
share one origin.
"""

from __future__ import annotations

from typing import List, Optional

from fastapi import FastAPI, HTTPException, Query
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from . import corpusworks, learners
from .guidelines import ALL_GUIDELINES
from .langid import LangTag
from .lexistore import LexiconSet
from .store import AnnotationStore


class AnnotationIn(BaseModel):
    annotator_id: str
    lang_tags: List[str]
    sentiment: int


def create_app(
    store: AnnotationStore,
    lexicons: Optional[LexiconSet] = None,
    static_dir: Optional[str] = None,
) -> FastAPI:
    app = FastAPI(title="codemixkit annotation service")
    lexicons = lexicons if lexicons is not None else LexiconSet()

    @app.get("/api/v1/items")
    def list_items(
        status: Optional[str] = Query(default=None),
        annotator: Optional[str] = Query(default=None),
        page: int = Query(default=1, ge=1),
        page_size: int = Query(default=20, ge=1, le=200),
    ):
        items = store.list_items(status=status, annotator=annotator)
        total = len(items)
        start = (page - 1) * page_size
        window = items[start : start + page_size]
        return {
            "total": total,
            "page": page,
            "page_size": page_size,
            "items": [i.to_dict() for i in window],
        }

    @app.get("/api/v1/items/{item_id}")
    def get_item(item_id: int):
        try:
            return store.get_item(item_id).to_dict()
        except KeyError:
            raise HTTPException(status_code=404, detail=f"no item {item_id}")

    @app.post("/api/v1/items/{item_id}/annotations", status_code=201)
    def post_annotation(item_id: int, body: AnnotationIn):
        try:
            record = store.add_annotation(
                item_id, body.annotator_id, body.lang_tags, body.sentiment
            )
        except KeyError:
            raise HTTPException(status_code=404, detail=f"no item {item_id}")
        except ValueError as exc:
            raise HTTPException(status_code=422, detail=str(exc))
        return record.to_dict()

    @app.get("/api/v1/agreement")
    def agreement(a: str, b: str):
        pairs = store.coannotated(a, b)
        if not pairs:
            return {"kappa_language": None, "kappa_sentiment": None, "n_items": 0}
        lang_a: List[str] = []
        lang_b: List[str] = []
        sent_a: List[int] = []
        sent_b: List[int] = []
        for rec_a, rec_b in pairs:
            lang_a.extend(rec_a.lang_tags)
            lang_b.extend(rec_b.lang_tags)
            sent_a.append(rec_a.sentiment)
            sent_b.append(rec_b.sentiment)
        return {
            "kappa_language": learners.cohen_kappa(lang_a, lang_b),
            "kappa_sentiment": learners.cohen_kappa(sent_a, sent_b),
            "n_items": len(pairs),
        }

    @app.get("/api/v1/guidelines")
    def guidelines():
        return {"guidelines": ALL_GUIDELINES}

    @app.get("/api/v1/stats")
    def stats():
        records, _, _ = store.export_gold()
        if not records:
            return {"aspects": {}, "complexity": {}, "n_records": 0}
        aspects = corpusworks.aspect_stats(records, lexicons)
        reports = [corpusworks.complexity(list(r.tags)) for r in records]
        n = len(reports)
        mean_complexity = {
            key: sum(rep.to_dict()[key] for rep in reports) / n
            for key in ("cmi", "lf", "sf", "mf", "cf1", "cf2", "cf3")
        }
        return {
            "aspects": aspects.to_dict(),
            "complexity": mean_complexity,
            "n_records": n,
        }

    if static_dir:
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app
