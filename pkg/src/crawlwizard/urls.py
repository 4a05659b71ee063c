"""URL normalization and the token grammars used on post text.

Normalization keeps frequency counts from splitting across trivially
different spellings of the same address: scheme and host are lowercased,
the fragment is dropped, and a bare trailing slash is removed. The path,
query and port are preserved as given.
"""

import re
from urllib.parse import urlsplit, urlunsplit

# Hashtag token: '#' then a letter, then letters/digits/underscores.
HASHTAG_RE = re.compile(r"#([A-Za-z][A-Za-z0-9_]*)")

# Candidate absolute http(s) URL in running text.
URL_RE = re.compile(r"https?://[^\s<>\"']+", re.IGNORECASE)

# Characters commonly glued onto the end of a URL by surrounding prose.
_TRAILING_PUNCT = ".,;:!?'\")]}"


def is_absolute_http_url(value: str) -> bool:
    try:
        parts = urlsplit(value)
    except ValueError:
        return False
    return parts.scheme.lower() in ("http", "https") and bool(parts.netloc)


def normalize_url(url: str) -> str:
    """Canonicalize an absolute http(s) URL; returns other strings unchanged."""
    try:
        parts = urlsplit(url.strip())
    except ValueError:
        return url
    if parts.scheme.lower() not in ("http", "https") or not parts.netloc:
        return url
    netloc = parts.netloc
    if "@" in netloc:
        userinfo, _, hostport = netloc.rpartition("@")
        netloc = userinfo + "@" + hostport.lower()
    else:
        netloc = netloc.lower()
    path = "" if parts.path == "/" else parts.path
    return urlunsplit((parts.scheme.lower(), netloc, path, parts.query, ""))


def extract_urls(text: str) -> list[str]:
    """All absolute http(s) URLs in `text`, normalized, deduplicated,
    in first-occurrence order."""
    seen: dict[str, None] = {}
    for match in URL_RE.finditer(text):
        candidate = match.group(0).rstrip(_TRAILING_PUNCT)
        if not is_absolute_http_url(candidate):
            continue
        seen.setdefault(normalize_url(candidate), None)
    return list(seen)


def extract_hashtag_tokens(text: str) -> list[str]:
    """All hashtag tokens in `text`, lowercased, deduplicated, in order.

    URL spans are masked first so fragments like example.org/page#top do
    not count as tags.
    """
    masked = URL_RE.sub(" ", text)
    seen: dict[str, None] = {}
    for match in HASHTAG_RE.finditer(masked):
        seen.setdefault(match.group(1).lower(), None)
    return list(seen)
