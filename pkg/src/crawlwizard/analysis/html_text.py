"""Plain-text extraction from HTML documents.

Script, style and comment content is dropped, block elements become
paragraph breaks, character references are decoded, and whitespace is
collapsed. Malformed markup and undecodable bytes never raise; bad bytes
become replacement characters.
"""

import codecs
import re
from html.parser import HTMLParser

_SKIP_TAGS = {"script", "style", "noscript", "template"}

# https://developer.mozilla.org/en-US/docs/Web/HTML/Block-level_elements,
# plus line-break and table/list structure tags.
_BLOCK_TAGS = {
    "address", "article", "aside", "blockquote", "br", "canvas", "dd", "div",
    "dl", "dt", "fieldset", "figcaption", "figure", "footer", "form",
    "h1", "h2", "h3", "h4", "h5", "h6", "header", "hgroup", "hr", "li",
    "main", "nav", "ol", "p", "pre", "section", "table", "td", "tfoot",
    "th", "tr", "ul", "video",
}

_CHARSET_RE = re.compile(rb"charset\s*=\s*[\"']?([A-Za-z0-9_\-]+)", re.IGNORECASE)


class _TextExtractor(HTMLParser):
    def __init__(self):
        super().__init__(convert_charrefs=True)
        self._skip_depth = 0
        self._in_title = False
        self._title_parts: list[str] = []
        self._paragraphs: list[str] = []
        self._current: list[str] = []

    def _flush(self):
        paragraph = " ".join("".join(self._current).split())
        self._current = []
        if paragraph:
            self._paragraphs.append(paragraph)

    def handle_starttag(self, tag, attrs):
        if tag in _SKIP_TAGS:
            self._skip_depth += 1
        elif tag == "title":
            self._in_title = True
        elif tag in _BLOCK_TAGS:
            self._flush()

    def handle_endtag(self, tag):
        if tag in _SKIP_TAGS:
            self._skip_depth = max(0, self._skip_depth - 1)
        elif tag == "title":
            self._in_title = False
        elif tag in _BLOCK_TAGS:
            self._flush()

    def handle_data(self, data):
        if self._skip_depth:
            return
        if self._in_title:
            self._title_parts.append(data)
        else:
            self._current.append(data)

    def result(self) -> tuple[str, str]:
        self._flush()
        title = " ".join("".join(self._title_parts).split())
        return title, "\n".join(self._paragraphs)


def sniff_encoding(body: bytes, declared: str | None = None) -> str:
    """Pick a decoding for an HTML body: header charset, then meta sniff,
    then UTF-8."""
    for candidate in (declared, _meta_charset(body)):
        if not candidate:
            continue
        try:
            codecs.lookup(candidate)
        except LookupError:
            continue
        return candidate
    return "utf-8"


def _meta_charset(body: bytes) -> str | None:
    match = _CHARSET_RE.search(body[:2048])
    return match.group(1).decode("ascii") if match else None


def extract_text(document: str | bytes, encoding: str | None = None) -> tuple[str, str]:
    """Extract (title, text) from an HTML document.

    Bytes are decoded with `encoding` (or a sniffed/UTF-8 fallback) and
    undecodable sequences are replaced rather than raised.
    """
    if isinstance(document, bytes):
        document = document.decode(sniff_encoding(document, encoding), errors="replace")
    parser = _TextExtractor()
    parser.feed(document)
    parser.close()
    return parser.result()
