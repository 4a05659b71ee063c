"""Result augmentation: fetch a candidate seed page and attach keywords
and entities.

Network failures degrade to analysis_status "fetch_failed" with empty
annotations; non-HTML targets are "skipped". Only programming-contract
violations propagate.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Union

from crawlwizard.analysis.entities import Entity, extract_entities
from crawlwizard.analysis.fetch import PageFetcher
from crawlwizard.analysis.textrank import Keyword, TextRankParams, textrank_keywords
from crawlwizard.search.models import RankedLink, WebResult

STATUS_OK = "ok"
STATUS_FETCH_FAILED = "fetch_failed"
STATUS_SKIPPED = "skipped"

DEFAULT_FETCH_CONCURRENCY = 4


@dataclass
class AnnotatedResult:
    """A search result enriched with analysis output; annotations are
    empty unless analysis_status is "ok"."""

    base: Union[WebResult, RankedLink]
    keywords: list[Keyword] = field(default_factory=list)
    entities: list[Entity] = field(default_factory=list)
    analysis_status: str = STATUS_SKIPPED

    def to_dict(self) -> dict:
        merged = self.base.to_dict()
        merged["keywords"] = [k.to_dict() for k in self.keywords]
        merged["entities"] = [e.to_dict() for e in self.entities]
        merged["analysis_status"] = self.analysis_status
        return merged


def annotate_result(base: Union[WebResult, RankedLink], fetcher: PageFetcher,
                    params: TextRankParams,
                    stopwords: frozenset[str]) -> AnnotatedResult:
    """Fetch the result's page and run keyword and entity extraction."""
    page = fetcher.fetch(base.url)
    if not page.ok:
        return AnnotatedResult(base=base, analysis_status=STATUS_FETCH_FAILED)
    if not page.is_html:
        return AnnotatedResult(base=base, analysis_status=STATUS_SKIPPED)
    return AnnotatedResult(
        base=base,
        keywords=textrank_keywords(page.text, params, stopwords),
        entities=extract_entities(page.text),
        analysis_status=STATUS_OK,
    )


def annotate_results(bases: list[Union[WebResult, RankedLink]], fetcher: PageFetcher,
                     params: TextRankParams, stopwords: frozenset[str],
                     max_workers: int = DEFAULT_FETCH_CONCURRENCY) -> list[AnnotatedResult]:
    """Annotate several results with bounded fetch parallelism, preserving
    input order."""
    if not bases:
        return []
    with ThreadPoolExecutor(max_workers=min(max_workers, len(bases))) as pool:
        return list(pool.map(
            lambda base: annotate_result(base, fetcher, params, stopwords), bases))
