"""Rule-based named-entity extraction from plain text.

Entities are maximal runs of capitalized tokens. A run that starts a
sentence keeps its first token only when the run continues past it, which
drops ordinary sentence-case words while keeping multi-word names. A
trailing parenthesized all-caps token is attached as an acronym alias.
Types come from keyword cues in the name; everything else is OTHER.

The extractor is deterministic and dependency-free; the Entity shape is
model-agnostic so a statistical tagger can replace it without touching
callers.
"""

import re
from dataclasses import dataclass

from crawlwizard.analysis.textrank import Token, tokenize

ENTITY_TYPES = ("PERSON", "ORGANIZATION", "LOCATION", "OTHER")

_ORG_CUES = {
    "agency", "association", "bank", "center", "centre", "college",
    "commission", "committee", "company", "corporation", "council",
    "department", "foundation", "institut", "institute", "ministry",
    "organisation", "organization", "university",
}
_LOC_CUES = {
    "city", "coast", "county", "district", "island", "islands", "kingdom",
    "lake", "mountains", "province", "republic", "river", "valley",
}
_PERSON_PREFIXES = {"dr", "mr", "mrs", "ms", "prof", "professor", "sir"}

# Sentence boundary characters; a newline also starts a new sentence.
_SENTENCE_BREAK = re.compile(r"[.!?\n]")

# Gap characters allowed inside one capitalized run (besides whitespace).
_RUN_GAP_OK = re.compile(r"^[\s\-'’.]*$")


def _gap_joins_run(prev: Token, gap: str) -> bool:
    if not _RUN_GAP_OK.match(gap):
        return False
    # A '.' bridges only initials and short abbreviations ("J. K.", "Dr.");
    # after a full word it terminates the sentence and the run.
    if "." in gap and len(prev.text) > 2:
        return False
    return True

_ALIAS_RE = re.compile(r"\s*\(\s*([A-Z]{2,})\s*\)")


@dataclass
class Entity:
    """A named thing found in text; `label` is the canonical form and
    defaults to the surface string."""

    surface: str
    label: str
    type: str = "OTHER"
    origin: str = "extracted"
    alias: str | None = None

    def to_dict(self) -> dict:
        return {
            "surface": self.surface,
            "label": self.label,
            "type": self.type,
            "origin": self.origin,
            "alias": self.alias,
        }


def _is_capitalized(token: Token) -> bool:
    return token.text[0].isupper() and token.text.isalpha()


def _classify(tokens: list[str]) -> str:
    lowered = [t.lower().rstrip(".") for t in tokens]
    if lowered and lowered[0] in _PERSON_PREFIXES:
        return "PERSON"
    if any(t in _ORG_CUES for t in lowered):
        return "ORGANIZATION"
    if any(t in _LOC_CUES for t in lowered):
        return "LOCATION"
    return "OTHER"


def extract_entities(text: str) -> list[Entity]:
    """Extract entities from plain text, deduplicated by label.

    The first occurrence wins; a later occurrence can only contribute a
    missing acronym alias.
    """
    tokens = tokenize(text)
    entities: dict[str, Entity] = {}

    i = 0
    while i < len(tokens):
        token = tokens[i]
        if not _is_capitalized(token):
            i += 1
            continue

        gap_before = text[tokens[i - 1].end:token.start] if i > 0 else ""
        sentence_initial = i == 0 or bool(_SENTENCE_BREAK.search(gap_before))

        run = [token]
        j = i + 1
        while j < len(tokens):
            gap = text[tokens[j - 1].end:tokens[j].start]
            if not _is_capitalized(tokens[j]) or not _gap_joins_run(tokens[j - 1], gap):
                break
            run.append(tokens[j])
            j += 1

        alias = None
        alias_match = _ALIAS_RE.match(text, run[-1].end)
        if alias_match:
            alias = alias_match.group(1)
            while j < len(tokens) and tokens[j].start < alias_match.end():
                j += 1

        # A lone capitalized token at sentence start is just sentence case.
        if not (sentence_initial and len(run) == 1):
            surface = text[run[0].start:run[-1].end]
            entity = Entity(
                surface=surface,
                label=surface,
                type=_classify([t.text for t in run]),
                alias=alias,
            )
            existing = entities.get(entity.label)
            if existing is None:
                entities[entity.label] = entity
            elif existing.alias is None and alias is not None:
                existing.alias = alias
        i = j

    return list(entities.values())
