from datetime import datetime, timezone
from pathlib import Path

import pytest

from crawlwizard.analysis.stopwords import load_stopwords
from crawlwizard.analysis.textrank import TextRankParams
from crawlwizard.search.models import SocialPost

FIXTURES_DIR = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture(scope="session")
def stopwords() -> frozenset[str]:
    return load_stopwords()


@pytest.fixture
def params() -> TextRankParams:
    return TextRankParams()


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES_DIR


@pytest.fixture
def make_post():
    """Factory for posts with extraction applied and an easy timestamp knob."""

    def factory(id: str, text: str, minute: int = 0, author: str = "someone") -> SocialPost:
        return SocialPost.from_text(
            id=id, text=text, author=author,
            timestamp=datetime(2014, 10, 1, 12, minute, tzinfo=timezone.utc))

    return factory
