"""
HTTP coding endpoint.

`POST /code` takes bracketed parse trees and a date and answers with the
enriched records. `GET /health` reports the loaded table versions. The app
only reads the dictionaries and tables it was created with, so requests are
served concurrently.
"""

from __future__ import annotations

import datetime as dt
import hashlib
import logging
from contextlib import asynccontextmanager

import uvicorn
from fastapi import FastAPI, HTTPException
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from phoenixlib._src.defaults.defaults_classes import default_settings
from phoenixlib._src.exceptions import PhoenixBadUserInput
from phoenixlib._src.ingest.ingest_documents import DocStatus, StoryDocument, story_id_for
from phoenixlib._src.input_checks import check_format_input_date
from phoenixlib._src.pipeline.pipeline_daily import code_documents
from phoenixlib._src.treebank.treebank_tree import parse_treebank
from phoenixlib._version import version as software_version

logger = logging.getLogger(__name__)

INTERNAL_ERROR = {"detail": "internal server error"}


class CodeRequest(BaseModel):
    """Trees of one story to be coded."""

    date: str = Field(..., examples=["2014-06-20"])
    trees: list[str] = Field(default_factory=list)
    story_id: str | None = None
    url: str | None = None
    source: str | None = None


class CodeResponse(BaseModel):
    records: list[dict[str, str]]


class HealthResponse(BaseModel):
    status: str
    dictionary_version: str
    goldstein_version: str
    software_version: str


def _request_document(req: CodeRequest, date: dt.date) -> StoryDocument:
    if req.story_id:
        story_id = req.story_id
    elif req.url:
        story_id = story_id_for(req.url)
    else:
        story_id = hashlib.sha256("\n".join(req.trees).encode("utf-8")).hexdigest()[:24]
    return StoryDocument(
        story_id=story_id,
        url=req.url or "",
        source_name=req.source or "",
        fetched_at=dt.datetime.combine(date, dt.time(), tzinfo=dt.UTC),
        parse_trees=tuple(req.trees),
        status=DocStatus.Parsed,
    )


def create_app(dicts, tables) -> FastAPI:
    """Build the coding app around loaded dictionaries and tables.

    Parameters
    ----------
    dicts: DictionarySet

    tables: EnrichTables

    Returns
    -------
    FastAPI application
    """

    @asynccontextmanager
    async def lifespan(app: FastAPI):  # noqa: ARG001
        logger.info(
            "coding endpoint ready with dictionaries %s",
            dicts.version,
            extra={"event": "serve.startup", "dictionary_version": dicts.version},
        )
        yield

    app = FastAPI(title="phoenixlib coder", version=software_version, lifespan=lifespan)

    @app.get("/health", response_model=HealthResponse)
    def health():
        return HealthResponse(
            status="ok",
            dictionary_version=dicts.version,
            goldstein_version=tables.goldstein.version,
            software_version=software_version,
        )

    @app.post("/code", response_model=CodeResponse)
    def code(req: CodeRequest):
        try:
            date = check_format_input_date(req.date)
        except PhoenixBadUserInput as err:
            raise HTTPException(status_code=422, detail=str(err)) from err
        if not req.trees:
            raise HTTPException(status_code=400, detail="Request carries no parse trees.")
        for index, text in enumerate(req.trees):
            try:
                parse_treebank(text)
            except PhoenixBadUserInput as err:
                raise HTTPException(status_code=400, detail=f"tree {index}: {err}") from err
        try:
            doc = _request_document(req, date)
            records = code_documents([doc], dicts, tables, date)
        except Exception:  # noqa: BLE001
            logger.exception(
                "coding request failed",
                extra={"event": "serve.internal_error"},
            )
            return JSONResponse(status_code=500, content=INTERNAL_ERROR)
        logger.debug(
            "coded %d trees into %d records",
            len(req.trees),
            len(records),
            extra={"event": "serve.code", "story_id": doc.story_id},
        )
        return CodeResponse(records=[rec.as_dict() for rec in records])

    return app


def serve(host, port, dicts, tables):
    """Run the coding endpoint with uvicorn until interrupted.

    Parameters
    ----------
    host: str or None
        None means `defaults.serve.host`.

    port: int or None
        None means `defaults.serve.port`.

    dicts: DictionarySet

    tables: EnrichTables
    """
    host = default_settings.serve.host if host is None else host
    port = default_settings.serve.port if port is None else port
    logger.info(
        "serving on http://%s:%d",
        host,
        port,
        extra={"event": "serve.listen", "host": host, "port": port},
    )
    uvicorn.run(create_app(dicts, tables), host=host, port=port, log_level="warning")
