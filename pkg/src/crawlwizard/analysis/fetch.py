"""Page download with fixture and live backends.

Fetching never raises for network conditions: timeouts, DNS failures and
error statuses come back as a PageContent with empty text and the status
(0 for transport errors) recorded. Bodies are capped, redirects limited
to five hops, and non-2xx responses yield no text.
"""

import json
import logging
from dataclasses import dataclass, field
from datetime import datetime
from pathlib import Path
from typing import Protocol

import httpx

from crawlwizard.analysis.html_text import extract_text, sniff_encoding
from crawlwizard.clock import Clock, SystemClock
from crawlwizard.urls import normalize_url

log = logging.getLogger(__name__)

DEFAULT_TIMEOUT = 10.0
DEFAULT_MAX_BYTES = 1024 * 1024
MAX_REDIRECTS = 5
DEFAULT_USER_AGENT = "crawlwizard/0.1 (+seed analysis)"

_HTML_TYPES = ("text/html", "application/xhtml+xml")


@dataclass
class PageContent:
    """One downloaded page; text/title are empty unless the fetch was a
    2xx HTML response."""

    url: str
    fetched_at: datetime
    http_status: int = 0
    content_type: str = ""
    body: bytes = b""
    encoding: str = "utf-8"
    title: str = ""
    text: str = ""
    truncated: bool = False
    error: str | None = None

    @property
    def ok(self) -> bool:
        return 200 <= self.http_status < 300 and self.error is None

    @property
    def is_html(self) -> bool:
        declared = self.content_type.split(";", 1)[0].strip().lower()
        return declared in _HTML_TYPES or declared == ""


class PageFetcher(Protocol):
    def fetch(self, url: str) -> PageContent: ...


def _build_page(url: str, fetched_at: datetime, status: int, content_type: str,
                body: bytes, declared_encoding: str | None,
                truncated: bool) -> PageContent:
    page = PageContent(
        url=url,
        fetched_at=fetched_at,
        http_status=status,
        content_type=content_type,
        body=body,
        encoding=sniff_encoding(body, declared_encoding),
        truncated=truncated,
    )
    if page.ok and page.is_html:
        page.title, page.text = extract_text(body, page.encoding)
    return page


class HttpFetcher:
    """Live fetcher over httpx with timeout, body cap and redirect limit."""

    def __init__(self, timeout: float = DEFAULT_TIMEOUT,
                 max_bytes: int = DEFAULT_MAX_BYTES,
                 user_agent: str = DEFAULT_USER_AGENT,
                 clock: Clock | None = None,
                 transport: httpx.BaseTransport | None = None):
        self.timeout = timeout
        self.max_bytes = max_bytes
        self.user_agent = user_agent
        self.clock = clock or SystemClock()
        self._transport = transport

    def fetch(self, url: str) -> PageContent:
        fetched_at = self.clock.now()
        try:
            with httpx.Client(
                timeout=self.timeout,
                follow_redirects=True,
                max_redirects=MAX_REDIRECTS,
                headers={"User-Agent": self.user_agent},
                transport=self._transport,
            ) as client:
                with client.stream("GET", url) as response:
                    chunks: list[bytes] = []
                    received = 0
                    truncated = False
                    for chunk in response.iter_bytes():
                        chunks.append(chunk)
                        received += len(chunk)
                        if received > self.max_bytes:
                            truncated = True
                            break
                    body = b"".join(chunks)[: self.max_bytes]
                    declared = response.charset_encoding
                    status = response.status_code
                    content_type = response.headers.get("content-type", "")
        except httpx.HTTPError as exc:
            log.info("fetch failed for %s: %s", url, exc)
            return PageContent(url=url, fetched_at=fetched_at, error=str(exc))
        return _build_page(url, fetched_at, status, content_type, body,
                           declared, truncated)


class FixtureFetcher:
    """Serves pages from a local directory, for offline runs and tests.

    The root holds an index.json mapping URL to either a file name or an
    object {"file", "status", "content_type"}. Unknown URLs come back as
    404 with empty text.
    """

    def __init__(self, root: Path | str, clock: Clock | None = None,
                 max_bytes: int = DEFAULT_MAX_BYTES):
        self.root = Path(root)
        self.clock = clock or SystemClock()
        self.max_bytes = max_bytes
        with open(self.root / "index.json", encoding="utf-8") as fh:
            raw_index: dict[str, object] = json.load(fh)
        self._index = {normalize_url(url): entry for url, entry in raw_index.items()}

    def fetch(self, url: str) -> PageContent:
        fetched_at = self.clock.now()
        entry = self._index.get(normalize_url(url))
        if entry is None:
            return PageContent(url=url, fetched_at=fetched_at, http_status=404,
                               content_type="text/html")
        if isinstance(entry, str):
            entry = {"file": entry}
        status = int(entry.get("status", 200))
        content_type = str(entry.get("content_type", "text/html; charset=utf-8"))
        body = b""
        truncated = False
        if "file" in entry:
            body = (self.root / str(entry["file"])).read_bytes()
            truncated = len(body) > self.max_bytes
            body = body[: self.max_bytes]
        return _build_page(url, fetched_at, status, content_type, body,
                           entry.get("encoding"), truncated)
