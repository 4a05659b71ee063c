"""Search connectors: live HTTP backends and deterministic file fixtures.

A connector returns raw hits (web) or raw posts (social); ranking,
truncation and link/hashtag extraction happen in the federation layer.
Fixture connectors read a JSON document keyed by exact query string and
make the whole pipeline testable offline; unknown queries yield empty
results.
"""

import json
import logging
import os
from dataclasses import dataclass
from datetime import datetime
from pathlib import Path
from typing import Protocol

import httpx

from crawlwizard.clock import parse_utc
from crawlwizard.errors import WizardError
from crawlwizard.search.models import Query

log = logging.getLogger(__name__)

DEFAULT_TIMEOUT = 10.0

# Hosts treated as URL shorteners by the live resolver.
SHORTENER_HOSTS = {"t.co", "bit.ly", "goo.gl", "tinyurl.com", "ow.ly", "buff.ly"}


class ConnectorError(WizardError):
    """Base for connector failures."""


class UnknownConnectorError(ConnectorError):
    """Lookup of a connector id that was never registered."""


class ConnectorUnavailableError(ConnectorError):
    """Network, auth or upstream failure of one connector."""

    def __init__(self, connector_id: str, cause: str):
        super().__init__(f"connector '{connector_id}' unavailable: {cause}")
        self.connector_id = connector_id
        self.cause = cause


class NoConnectorsRegisteredError(ConnectorError):
    def __init__(self):
        super().__init__("no search connectors registered")


class AllConnectorsFailedError(ConnectorError):
    """Every registered connector failed for one query."""

    def __init__(self, causes: dict[str, str]):
        detail = "; ".join(f"{cid}: {cause}" for cid, cause in sorted(causes.items()))
        super().__init__(f"all search connectors failed ({detail})")
        self.causes = causes


@dataclass(frozen=True)
class WebHit:
    """Unranked (URL, title, description) triple as returned by a backend."""

    url: str
    title: str
    description: str = ""


@dataclass(frozen=True)
class RawPost:
    """Post as returned by a backend, before link/hashtag extraction."""

    id: str
    text: str
    author: str
    timestamp: datetime


class WebConnector(Protocol):
    connector_id: str

    def search(self, query: Query) -> list[WebHit]: ...


class SocialConnector(Protocol):
    connector_id: str

    def search(self, query: Query) -> list[RawPost]: ...


class ConnectorRegistry:
    """Registered connectors, keyed by id, in registration order."""

    def __init__(self):
        self.web: dict[str, WebConnector] = {}
        self.social: dict[str, SocialConnector] = {}

    def register_web(self, connector: WebConnector) -> None:
        self.web[connector.connector_id] = connector

    def register_social(self, connector: SocialConnector) -> None:
        self.social[connector.connector_id] = connector

    def is_empty(self) -> bool:
        return not self.web and not self.social


class FixtureWebConnector:
    """Replays recorded web results from a JSON file.

    File shape: {"<query>": [{"url": ..., "title": ..., "description": ...}, ...]}
    """

    def __init__(self, connector_id: str, path: Path | str):
        self.connector_id = connector_id
        self._by_query = _load_fixture(path)

    def search(self, query: Query) -> list[WebHit]:
        return [
            WebHit(
                url=entry["url"],
                title=entry.get("title", ""),
                description=entry.get("description", ""),
            )
            for entry in self._by_query.get(query.text, [])
        ]


class FixtureSocialConnector:
    """Replays recorded posts from a JSON file.

    File shape: {"<query>": [{"id", "text", "author", "timestamp"}, ...]}
    with ISO-8601 UTC timestamps.
    """

    def __init__(self, connector_id: str, path: Path | str):
        self.connector_id = connector_id
        self._by_query = _load_fixture(path)

    def search(self, query: Query) -> list[RawPost]:
        return [
            RawPost(
                id=str(entry["id"]),
                text=entry.get("text", ""),
                author=entry.get("author", ""),
                timestamp=parse_utc(entry["timestamp"]),
            )
            for entry in self._by_query.get(query.text, [])
        ]


def _load_fixture(path: Path | str) -> dict[str, list[dict]]:
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, dict):
        raise ValueError(f"fixture file {path} must hold a query-keyed object")
    return data


class LiveWebConnector:
    """Web search over a Bing-style JSON API.

    Expects the response to carry hits under webPages.value with url/name/
    snippet fields. The API key is read from the environment variable named
    by `credential_env` and sent as Ocp-Apim-Subscription-Key.
    """

    def __init__(self, connector_id: str, endpoint: str, credential_env: str,
                 timeout: float = DEFAULT_TIMEOUT, transport: httpx.BaseTransport | None = None):
        self.connector_id = connector_id
        self.endpoint = endpoint
        self.credential_env = credential_env
        self.timeout = timeout
        self._transport = transport

    def search(self, query: Query) -> list[WebHit]:
        key = os.environ.get(self.credential_env)
        if not key:
            raise ConnectorUnavailableError(
                self.connector_id, f"credential env var {self.credential_env} not set")
        try:
            with httpx.Client(timeout=self.timeout, transport=self._transport) as client:
                response = client.get(
                    self.endpoint,
                    params={"q": query.text, "count": query.max_web_results},
                    headers={"Ocp-Apim-Subscription-Key": key},
                )
        except httpx.HTTPError as exc:
            raise ConnectorUnavailableError(self.connector_id, str(exc)) from exc
        if response.status_code != 200:
            raise ConnectorUnavailableError(
                self.connector_id, f"HTTP {response.status_code}")
        try:
            entries = response.json().get("webPages", {}).get("value", [])
        except ValueError as exc:
            raise ConnectorUnavailableError(self.connector_id, f"bad JSON: {exc}") from exc
        return [
            WebHit(
                url=entry.get("url", ""),
                title=entry.get("name", ""),
                description=entry.get("snippet", ""),
            )
            for entry in entries
        ]


class LiveSocialConnector:
    """Post search over a Twitter-v2-style recent-search JSON API.

    Expects posts under `data` with id/text/author_id/created_at fields.
    The bearer token is read from the environment variable named by
    `credential_env`.
    """

    def __init__(self, connector_id: str, endpoint: str, credential_env: str,
                 timeout: float = DEFAULT_TIMEOUT, transport: httpx.BaseTransport | None = None):
        self.connector_id = connector_id
        self.endpoint = endpoint
        self.credential_env = credential_env
        self.timeout = timeout
        self._transport = transport

    def search(self, query: Query) -> list[RawPost]:
        token = os.environ.get(self.credential_env)
        if not token:
            raise ConnectorUnavailableError(
                self.connector_id, f"credential env var {self.credential_env} not set")
        try:
            with httpx.Client(timeout=self.timeout, transport=self._transport) as client:
                response = client.get(
                    self.endpoint,
                    params={"query": query.text, "max_results": min(query.max_posts, 100)},
                    headers={"Authorization": f"Bearer {token}"},
                )
        except httpx.HTTPError as exc:
            raise ConnectorUnavailableError(self.connector_id, str(exc)) from exc
        if response.status_code != 200:
            raise ConnectorUnavailableError(
                self.connector_id, f"HTTP {response.status_code}")
        try:
            entries = response.json().get("data", [])
        except ValueError as exc:
            raise ConnectorUnavailableError(self.connector_id, f"bad JSON: {exc}") from exc
        posts = []
        for entry in entries:
            try:
                timestamp = parse_utc(entry["created_at"])
            except (KeyError, ValueError):
                continue
            posts.append(RawPost(
                id=str(entry.get("id", "")),
                text=entry.get("text", ""),
                author=str(entry.get("author_id", "")),
                timestamp=timestamp,
            ))
        return posts


class ShortUrlResolver:
    """Expands known shortener URLs by following redirects (live mode only).

    Results are cached per resolver instance; failures fall back to the
    original URL so a dead shortener never breaks a search.
    """

    def __init__(self, timeout: float = 5.0, hosts: set[str] | None = None,
                 transport: httpx.BaseTransport | None = None):
        self.timeout = timeout
        self.hosts = hosts if hosts is not None else SHORTENER_HOSTS
        self._transport = transport
        self._cache: dict[str, str] = {}

    def __call__(self, url: str) -> str:
        host = httpx.URL(url).host.lower() if url else ""
        if host not in self.hosts:
            return url
        if url in self._cache:
            return self._cache[url]
        try:
            with httpx.Client(timeout=self.timeout, follow_redirects=True,
                              transport=self._transport) as client:
                final = str(client.head(url).url)
        except httpx.HTTPError as exc:
            log.debug("short URL %s not resolved: %s", url, exc)
            final = url
        self._cache[url] = final
        return final
