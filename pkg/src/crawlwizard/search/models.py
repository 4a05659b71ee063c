"""Domain types for the search layer."""

from dataclasses import dataclass, field
from datetime import datetime

from crawlwizard.clock import isoformat_utc
from crawlwizard.errors import ValidationError
from crawlwizard.urls import extract_hashtag_tokens, extract_urls, is_absolute_http_url


@dataclass(frozen=True)
class Query:
    """One keyword search, with per-source result limits."""

    text: str
    max_web_results: int = 10
    max_posts: int = 100

    def __post_init__(self):
        trimmed = self.text.strip()
        if not trimmed:
            raise ValidationError("query text must be non-empty", field="text")
        object.__setattr__(self, "text", trimmed)
        if self.max_web_results < 1:
            raise ValidationError("max_web_results must be >= 1", field="max_web_results")
        if self.max_posts < 1:
            raise ValidationError("max_posts must be >= 1", field="max_posts")

    def to_dict(self) -> dict:
        return {
            "text": self.text,
            "max_web_results": self.max_web_results,
            "max_posts": self.max_posts,
        }


@dataclass(frozen=True)
class WebResult:
    """One ranked hit from a web search connector."""

    url: str
    title: str
    description: str
    rank: int
    source: str

    def __post_init__(self):
        if not is_absolute_http_url(self.url):
            raise ValidationError(f"not an absolute http(s) URL: {self.url!r}", field="url")
        if self.rank < 1:
            raise ValidationError("rank must be >= 1", field="rank")

    def to_dict(self) -> dict:
        return {
            "url": self.url,
            "title": self.title,
            "description": self.description,
            "rank": self.rank,
            "source": self.source,
        }


@dataclass(frozen=True)
class SocialPost:
    """One social-media post with links and hashtags pulled out of its text.

    `links` holds every URL occurring in the text, normalized and
    deduplicated; `hashtags` are lowercase tags without the '#'.
    """

    id: str
    text: str
    author: str
    timestamp: datetime
    links: tuple[str, ...] = ()
    hashtags: tuple[str, ...] = ()

    @classmethod
    def from_text(cls, id: str, text: str, author: str, timestamp: datetime,
                  url_resolver=None) -> "SocialPost":
        """Build a post, extracting links and hashtags from its text.

        `url_resolver` optionally maps each extracted URL to its final
        target (shortener expansion in live mode) before normalization.
        """
        urls = extract_urls(text)
        if url_resolver is not None:
            resolved: dict[str, None] = {}
            for url in urls:
                resolved.setdefault(url_resolver(url), None)
            urls = list(resolved)
        return cls(
            id=id,
            text=text,
            author=author,
            timestamp=timestamp,
            links=tuple(urls),
            hashtags=tuple(extract_hashtag_tokens(text)),
        )

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "text": self.text,
            "author": self.author,
            "timestamp": isoformat_utc(self.timestamp),
            "links": list(self.links),
            "hashtags": list(self.hashtags),
        }


@dataclass(frozen=True)
class RankedLink:
    """A link shared by social posts, ranked by how many posts carry it."""

    url: str
    frequency: int
    description: str
    supporting_post_ids: tuple[str, ...]

    def __post_init__(self):
        if self.frequency != len(self.supporting_post_ids):
            raise ValidationError("frequency must equal the number of supporting posts")

    def to_dict(self) -> dict:
        return {
            "url": self.url,
            "frequency": self.frequency,
            "description": self.description,
            "supporting_post_ids": list(self.supporting_post_ids),
        }


@dataclass
class SearchResponse:
    """Combined output of one federated query.

    Both result sections are always present; a failed source leaves its
    section empty and adds a human-readable warning.
    """

    query: Query
    web: list[WebResult] = field(default_factory=list)
    social_links: list[RankedLink] = field(default_factory=list)
    proposed_keywords: list[tuple[str, int]] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "query": self.query.to_dict(),
            "web": [r.to_dict() for r in self.web],
            "social_links": [l.to_dict() for l in self.social_links],
            "proposed_keywords": [
                {"tag": tag, "frequency": freq} for tag, freq in self.proposed_keywords
            ],
            "warnings": list(self.warnings),
        }
