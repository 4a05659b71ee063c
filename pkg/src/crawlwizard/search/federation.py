"""Federated search: dispatch one query to every connector and normalize.

Web results keep their per-connector ranking; social posts are reduced to
links ranked by how many distinct posts share them, plus hashtag keyword
proposals. A failing source degrades its own section and leaves a warning
instead of failing the query; only the loss of every connector is an error.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable

from crawlwizard.search.connectors import (
    AllConnectorsFailedError,
    ConnectorRegistry,
    ConnectorUnavailableError,
    NoConnectorsRegisteredError,
    UnknownConnectorError,
)
from crawlwizard.search.models import Query, RankedLink, SearchResponse, SocialPost, WebResult
from crawlwizard.urls import is_absolute_http_url, normalize_url

log = logging.getLogger(__name__)

DESCRIPTION_POST_LIMIT = 3
DESCRIPTION_MAX_CHARS = 500
DESCRIPTION_SEPARATOR = " — "


def search_web(query: Query, connector_id: str, registry: ConnectorRegistry) -> list[WebResult]:
    """Run one web connector; ranks are reassigned 1..n after truncation."""
    connector = registry.web.get(connector_id)
    if connector is None:
        raise UnknownConnectorError(f"unknown web connector: {connector_id!r}")
    results: list[WebResult] = []
    for hit in connector.search(query):
        if len(results) >= query.max_web_results:
            break
        if not is_absolute_http_url(hit.url):
            log.warning("connector %s returned non-absolute URL %r, skipping",
                        connector_id, hit.url)
            continue
        results.append(WebResult(
            url=hit.url,
            title=hit.title,
            description=hit.description,
            rank=len(results) + 1,
            source=connector_id,
        ))
    return results


def search_social(query: Query, connector_id: str, registry: ConnectorRegistry,
                  url_resolver: Callable[[str], str] | None = None) -> list[SocialPost]:
    """Run one social connector and extract links/hashtags from each post."""
    connector = registry.social.get(connector_id)
    if connector is None:
        raise UnknownConnectorError(f"unknown social connector: {connector_id!r}")
    raw_posts = connector.search(query)[: query.max_posts]
    return [
        SocialPost.from_text(
            id=raw.id, text=raw.text, author=raw.author, timestamp=raw.timestamp,
            url_resolver=url_resolver,
        )
        for raw in raw_posts
    ]


def _supporting_posts(url: str, posts: list[SocialPost]) -> list[SocialPost]:
    """Distinct posts containing `url`, most recent first, ties by id."""
    normalized = normalize_url(url)
    seen: dict[str, SocialPost] = {}
    for post in posts:
        if normalized in post.links:
            seen.setdefault(post.id, post)
    return sorted(seen.values(), key=lambda p: (-p.timestamp.timestamp(), p.id))


def build_link_description(url: str, posts: list[SocialPost]) -> str:
    """Describe a shared link with the text of its most recent posts.

    Up to three supporting posts are joined, newest first, and the result
    is capped at 500 characters. No supporting post yields an empty string.
    """
    supporters = _supporting_posts(url, posts)
    joined = DESCRIPTION_SEPARATOR.join(p.text for p in supporters[:DESCRIPTION_POST_LIMIT])
    return joined[:DESCRIPTION_MAX_CHARS]


def extract_links_ranked(posts: list[SocialPost]) -> list[RankedLink]:
    """One RankedLink per distinct normalized URL across `posts`.

    Frequency counts distinct posts (a URL repeated inside one post counts
    once, by construction of SocialPost.links). Order: frequency
    descending, then URL ascending.
    """
    urls: dict[str, None] = {}
    for post in posts:
        for url in post.links:
            urls.setdefault(url, None)
    links = []
    for url in urls:
        supporters = _supporting_posts(url, posts)
        links.append(RankedLink(
            url=url,
            frequency=len(supporters),
            description=build_link_description(url, posts),
            supporting_post_ids=tuple(p.id for p in supporters),
        ))
    links.sort(key=lambda l: (-l.frequency, l.url))
    return links


def extract_hashtags(posts: list[SocialPost]) -> list[tuple[str, int]]:
    """(tag, frequency) pairs; frequency counts distinct posts carrying the
    tag. Order: frequency descending, then tag ascending."""
    counts: dict[str, int] = {}
    for post in posts:
        for tag in set(post.hashtags):
            counts[tag] = counts.get(tag, 0) + 1
    return sorted(counts.items(), key=lambda item: (-item[1], item[0]))


def federated_search(query: Query, registry: ConnectorRegistry,
                     url_resolver: Callable[[str], str] | None = None,
                     max_workers: int = 8) -> SearchResponse:
    """Query every registered connector concurrently and assemble a response.

    Raises NoConnectorsRegisteredError with an empty registry and
    AllConnectorsFailedError when every connector fails; a partial failure
    only empties the affected section and records a warning.
    """
    if registry.is_empty():
        raise NoConnectorsRegisteredError()

    jobs: list[tuple[str, str]] = [("web", cid) for cid in registry.web]
    jobs += [("social", cid) for cid in registry.social]

    def run(job: tuple[str, str]):
        kind, cid = job
        if kind == "web":
            return search_web(query, cid, registry)
        return search_social(query, cid, registry, url_resolver=url_resolver)

    outcomes: dict[tuple[str, str], object] = {}
    with ThreadPoolExecutor(max_workers=min(max_workers, len(jobs))) as pool:
        futures = {job: pool.submit(run, job) for job in jobs}
        for job, future in futures.items():
            try:
                outcomes[job] = future.result()
            except ConnectorUnavailableError as exc:
                outcomes[job] = exc

    failures = {job: out for job, out in outcomes.items()
                if isinstance(out, ConnectorUnavailableError)}
    if len(failures) == len(jobs):
        raise AllConnectorsFailedError({cid: exc.cause for (_, cid), exc in failures.items()})

    web: list[WebResult] = []
    posts: list[SocialPost] = []
    warnings: list[str] = []
    for job in jobs:
        kind, cid = job
        out = outcomes[job]
        if isinstance(out, ConnectorUnavailableError):
            warnings.append(f"{kind} connector '{cid}' unavailable: {out.cause}")
            log.warning("degraded search for %r: %s", query.text, warnings[-1])
        elif kind == "web":
            web.extend(out)
        else:
            posts.extend(out)

    return SearchResponse(
        query=query,
        web=web,
        social_links=extract_links_ranked(posts),
        proposed_keywords=extract_hashtags(posts),
        warnings=warnings,
    )
