"""Stopword list loading.

File format: UTF-8, one lowercase token per line, '#' starts a comment.
The default list is English and ships with the package; other languages
are a configuration concern.
"""

from importlib.resources import files
from pathlib import Path


def load_stopwords(path: Path | str | None = None) -> frozenset[str]:
    if path is None:
        content = (files("crawlwizard.analysis") / "data" / "stopwords_en.txt").read_text(
            encoding="utf-8")
    else:
        content = Path(path).read_text(encoding="utf-8")
    words = set()
    for line in content.splitlines():
        token = line.split("#", 1)[0].strip().lower()
        if token:
            words.add(token)
    return frozenset(words)
