"""FastAPI application wiring the wizard service together.

Every state change flows through exactly one spec event; the API holds no
state of its own. In fixture mode (a fixtures directory is configured)
search connectors and the page fetcher replay recorded files, making
responses deterministic offline.
"""

import logging
from dataclasses import dataclass, field
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse, Response
from pydantic import BaseModel, Field

from crawlwizard.analysis.annotate import annotate_results
from crawlwizard.analysis.fetch import (
    DEFAULT_MAX_BYTES,
    DEFAULT_TIMEOUT,
    DEFAULT_USER_AGENT,
    FixtureFetcher,
    HttpFetcher,
)
from crawlwizard.analysis.stopwords import load_stopwords
from crawlwizard.analysis.textrank import TextRankParams
from crawlwizard.api.errors import error_response
from crawlwizard.clock import Clock, SystemClock
from crawlwizard.errors import (
    CorruptionError,
    NotFoundError,
    StorageError,
    ValidationError,
)
from crawlwizard.search.connectors import (
    AllConnectorsFailedError,
    ConnectorRegistry,
    ConnectorUnavailableError,
    FixtureSocialConnector,
    FixtureWebConnector,
    LiveSocialConnector,
    LiveWebConnector,
    NoConnectorsRegisteredError,
    ShortUrlResolver,
    UnknownConnectorError,
)
from crawlwizard.search.federation import federated_search
from crawlwizard.search.models import Query
from crawlwizard.specs.events import EventKind, Provenance
from crawlwizard.specs.export import document_to_json
from crawlwizard.specs.store import SpecStore

log = logging.getLogger(__name__)

DEFAULT_WEB_ENDPOINT = "https://api.bing.microsoft.com/v7.0/search"
DEFAULT_SOCIAL_ENDPOINT = "https://api.twitter.com/2/tweets/search/recent"
WEB_CREDENTIAL_ENV = "WIZARD_WEBSEARCH_KEY"
SOCIAL_CREDENTIAL_ENV = "WIZARD_SOCIAL_TOKEN"


@dataclass
class AppConfig:
    data_dir: Path
    fixtures_dir: Path | None = None
    stopwords_path: Path | None = None
    annotate_top_k: int = 5
    fetch_timeout: float = DEFAULT_TIMEOUT
    fetch_max_bytes: int = DEFAULT_MAX_BYTES
    user_agent: str = DEFAULT_USER_AGENT
    web_endpoint: str = DEFAULT_WEB_ENDPOINT
    social_endpoint: str = DEFAULT_SOCIAL_ENDPOINT
    textrank: TextRankParams = field(default_factory=TextRankParams)
    ui_dir: Path | None = None

    @property
    def fixture_mode(self) -> bool:
        return self.fixtures_dir is not None


class SearchRequest(BaseModel):
    query: str
    max_web_results: int = Field(default=10, ge=1)
    max_posts: int = Field(default=100, ge=1)
    spec_id: str | None = None


class CreateSpecRequest(BaseModel):
    name: str


class ProvenanceBody(BaseModel):
    source: str = "manual"
    query: str | None = None


class EventRequest(BaseModel):
    kind: str
    payload: dict
    provenance: ProvenanceBody = Field(default_factory=ProvenanceBody)


class ScheduleRequest(BaseModel):
    start: str
    duration_seconds: int


def build_registry(config: AppConfig) -> ConnectorRegistry:
    registry = ConnectorRegistry()
    if config.fixture_mode:
        web_path = config.fixtures_dir / "web.json"
        social_path = config.fixtures_dir / "social.json"
        if web_path.exists():
            registry.register_web(FixtureWebConnector("websearch", web_path))
        if social_path.exists():
            registry.register_social(FixtureSocialConnector("social", social_path))
    else:
        registry.register_web(LiveWebConnector(
            "websearch", config.web_endpoint, WEB_CREDENTIAL_ENV,
            timeout=config.fetch_timeout))
        registry.register_social(LiveSocialConnector(
            "social", config.social_endpoint, SOCIAL_CREDENTIAL_ENV,
            timeout=config.fetch_timeout))
    return registry


def create_app(config: AppConfig, clock: Clock | None = None) -> FastAPI:
    clock = clock or SystemClock()
    registry = build_registry(config)
    stopwords = load_stopwords(config.stopwords_path)
    store = SpecStore(config.data_dir, clock=clock)
    if config.fixture_mode and (config.fixtures_dir / "pages").is_dir():
        fetcher = FixtureFetcher(config.fixtures_dir / "pages", clock=clock,
                                 max_bytes=config.fetch_max_bytes)
    else:
        fetcher = HttpFetcher(timeout=config.fetch_timeout,
                              max_bytes=config.fetch_max_bytes,
                              user_agent=config.user_agent, clock=clock)
    url_resolver = None if config.fixture_mode else ShortUrlResolver()

    app = FastAPI(title="crawlwizard", version="0.1.0")
    app.state.store = store
    app.state.registry = registry
    app.state.config = config
    app.state.clock = clock

    # -- error mapping -----------------------------------------------------

    @app.exception_handler(RequestValidationError)
    async def on_request_validation(request: Request, exc: RequestValidationError):
        return error_response("validation", "invalid request body",
                              detail={"errors": exc.errors()})

    @app.exception_handler(ValidationError)
    async def on_validation(request: Request, exc: ValidationError):
        detail = {"field": exc.field} if exc.field else None
        return error_response("validation", str(exc), detail)

    @app.exception_handler(UnknownConnectorError)
    async def on_unknown_connector(request: Request, exc: UnknownConnectorError):
        return error_response("validation", str(exc))

    @app.exception_handler(NotFoundError)
    async def on_not_found(request: Request, exc: NotFoundError):
        return error_response("not_found", str(exc))

    @app.exception_handler(NoConnectorsRegisteredError)
    async def on_no_connectors(request: Request, exc: NoConnectorsRegisteredError):
        return error_response("upstream_unavailable", str(exc))

    @app.exception_handler(AllConnectorsFailedError)
    async def on_all_failed(request: Request, exc: AllConnectorsFailedError):
        return error_response("upstream_unavailable", str(exc),
                              detail={"causes": exc.causes})

    @app.exception_handler(ConnectorUnavailableError)
    async def on_connector_unavailable(request: Request, exc: ConnectorUnavailableError):
        return error_response("upstream_unavailable", str(exc))

    @app.exception_handler(CorruptionError)
    async def on_corruption(request: Request, exc: CorruptionError):
        detail = {"event_id": exc.event_id} if exc.event_id else None
        return error_response("corruption", str(exc), detail)

    @app.exception_handler(StorageError)
    async def on_storage(request: Request, exc: StorageError):
        return error_response("internal", str(exc))

    # -- endpoints -----------------------------------------------------------

    @app.get("/healthz")
    def healthz():
        return {"status": "ok"}

    @app.post("/api/search")
    def search(body: SearchRequest):
        query = Query(text=body.query, max_web_results=body.max_web_results,
                      max_posts=body.max_posts)
        if body.spec_id is not None:
            store.get_spec(body.spec_id)  # 404 before any upstream work

        response = federated_search(query, registry, url_resolver=url_resolver)

        if body.spec_id is not None:
            store.apply_event(
                body.spec_id, EventKind.QUERY_ISSUED, {"query": query.text},
                Provenance(source="manual", query=query.text))

        annotated = annotate_results(
            response.web[: config.annotate_top_k], fetcher,
            config.textrank, stopwords)
        payload = response.to_dict()
        web_items = [a.to_dict() for a in annotated]
        for result in response.web[config.annotate_top_k:]:
            item = result.to_dict()
            item.update({"keywords": [], "entities": [], "analysis_status": "skipped"})
            web_items.append(item)
        payload["web"] = web_items
        return payload

    @app.post("/api/specs", status_code=201)
    def create_spec(body: CreateSpecRequest):
        return store.create_spec(body.name).to_dict()

    @app.get("/api/specs/{spec_id}")
    def get_spec(spec_id: str):
        return store.get_spec(spec_id).to_dict()

    @app.post("/api/specs/{spec_id}/events")
    def post_event(spec_id: str, body: EventRequest):
        provenance = Provenance(source=body.provenance.source,
                                query=body.provenance.query)
        spec = store.apply_event(spec_id, body.kind, body.payload, provenance)
        return spec.to_dict()

    @app.put("/api/specs/{spec_id}/schedule")
    def put_schedule(spec_id: str, body: ScheduleRequest):
        spec = store.set_schedule(spec_id, body.start, body.duration_seconds)
        return spec.to_dict()

    @app.get("/api/specs/{spec_id}/export")
    def export_spec(spec_id: str):
        return Response(content=document_to_json(store.export(spec_id)),
                        media_type="application/json")

    @app.get("/api/specs/{spec_id}/description")
    def describe_spec(spec_id: str):
        return store.describe(spec_id).to_dict()

    if config.ui_dir is not None:
        from fastapi.staticfiles import StaticFiles
        app.mount("/", StaticFiles(directory=config.ui_dir, html=True), name="ui")

    return app
