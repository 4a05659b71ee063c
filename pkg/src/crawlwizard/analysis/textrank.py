"""Graph-based key-term ranking over word co-occurrence.

Candidate terms become vertices of an undirected graph; an edge carries
the number of times two terms co-occur within a sliding window of
consecutive candidate tokens. Vertices are scored by the damped recursive
ranking

    WS(i) = (1 - d) + d * sum over neighbors j of
            (w_ji / sum over neighbors k of j of w_jk) * WS(j)

iterated from 1.0 until the largest per-vertex change drops below a
convergence threshold. Top-scoring terms that sit next to each other in
the source text collapse into multi-word phrases.
"""

import math
import re
from dataclasses import dataclass, field, replace
from typing import NamedTuple

MIN_TOKEN_LENGTH = 3

_WORD_RE = re.compile(r"\w+", re.UNICODE)


@dataclass(frozen=True)
class TextRankParams:
    damping: float = 0.85
    window: int = 2
    convergence_epsilon: float = 1e-4
    max_iterations: int = 100
    keyword_fraction: float = 1 / 3
    max_keywords: int = 10

    def __post_init__(self):
        if not 0.0 < self.damping < 1.0:
            raise ValueError("damping must be in (0, 1)")
        if self.window < 2:
            raise ValueError("window must be >= 2")
        if self.convergence_epsilon <= 0.0:
            raise ValueError("convergence_epsilon must be positive")
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be >= 1")
        if not 0.0 < self.keyword_fraction <= 1.0:
            raise ValueError("keyword_fraction must be in (0, 1]")
        if self.max_keywords < 1:
            raise ValueError("max_keywords must be >= 1")


@dataclass
class TermGraph:
    """Undirected weighted co-occurrence graph with one score per vertex.

    `adjacency[a][b]` is the symmetric positive co-occurrence count; there
    are no self-loops. Vertices are kept sorted so that iteration order,
    and therefore floating-point summation order, is reproducible.
    """

    vertices: list[str] = field(default_factory=list)
    adjacency: dict[str, dict[str, int]] = field(default_factory=dict)
    scores: dict[str, float] = field(default_factory=dict)

    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency.values()) // 2


@dataclass(frozen=True)
class Keyword:
    text: str
    score: float
    origin: str = "textrank"

    def to_dict(self) -> dict:
        return {"text": self.text, "score": self.score, "origin": self.origin}


class Token(NamedTuple):
    text: str
    start: int
    end: int


def tokenize(text: str) -> list[Token]:
    return [Token(m.group(0), m.start(), m.end()) for m in _WORD_RE.finditer(text)]


def is_candidate(token_text: str, stopwords: frozenset[str]) -> bool:
    """Candidate terms: alphabetic, at least 3 characters, not a stopword."""
    return (
        len(token_text) >= MIN_TOKEN_LENGTH
        and token_text.isalpha()
        and token_text.lower() not in stopwords
    )


def candidate_terms(text: str, stopwords: frozenset[str]) -> list[str]:
    """Normalized candidate terms of `text`, in order of occurrence."""
    return [t.text.lower() for t in tokenize(text) if is_candidate(t.text, stopwords)]


def build_term_graph(text: str, params: TextRankParams,
                     stopwords: frozenset[str]) -> TermGraph:
    """Build the co-occurrence graph of candidate terms.

    Two terms co-occur when they appear within `params.window` consecutive
    candidate tokens, i.e. at distance < window in the filtered token
    sequence. Repeated co-occurrence accumulates edge weight; identical
    terms never form a self-loop.
    """
    terms = candidate_terms(text, stopwords)
    adjacency: dict[str, dict[str, int]] = {term: {} for term in terms}
    for i, a in enumerate(terms):
        for j in range(i + 1, min(i + params.window, len(terms))):
            b = terms[j]
            if a == b:
                continue
            adjacency[a][b] = adjacency[a].get(b, 0) + 1
            adjacency[b][a] = adjacency[b].get(a, 0) + 1
    vertices = sorted(adjacency)
    return TermGraph(
        vertices=vertices,
        adjacency=adjacency,
        scores={v: 1.0 for v in vertices},
    )


def rank_terms(graph: TermGraph, params: TextRankParams) -> TermGraph:
    """Score vertices by iterating the damped ranking recurrence.

    All scores start at 1.0 and every sweep recomputes them from the
    previous sweep's values, stopping when the largest per-vertex change
    falls below `convergence_epsilon` or after `max_iterations` sweeps.
    Isolated vertices end at exactly 1 - damping.
    """
    d = params.damping
    vertices = graph.vertices
    neighbor_weights = {
        v: sorted(graph.adjacency.get(v, {}).items()) for v in vertices
    }
    out_weight = {v: sum(w for _, w in nbrs) for v, nbrs in neighbor_weights.items()}

    scores = {v: 1.0 for v in vertices}
    for _ in range(params.max_iterations):
        new_scores = {}
        for v in vertices:
            acc = 0.0
            for u, w_uv in neighbor_weights[v]:
                acc += (w_uv / out_weight[u]) * scores[u]
            new_scores[v] = (1.0 - d) + d * acc
        delta = max((abs(new_scores[v] - scores[v]) for v in vertices), default=0.0)
        scores = new_scores
        if delta < params.convergence_epsilon:
            break
    return replace(graph, scores=scores)


def select_terms(graph: TermGraph, params: TextRankParams) -> dict[str, float]:
    """Top vertices by score: ceil(keyword_fraction * |V|), capped at
    max_keywords, ties broken by term ascending."""
    if not graph.vertices:
        return {}
    count = min(params.max_keywords,
                math.ceil(params.keyword_fraction * len(graph.vertices)))
    ordered = sorted(graph.vertices, key=lambda v: (-graph.scores[v], v))
    return {v: graph.scores[v] for v in ordered[:count]}


def collapse_phrases(text: str, selected: dict[str, float],
                     stopwords: frozenset[str]) -> dict[str, float]:
    """Merge selected terms that are adjacent in the source text.

    Adjacent means consecutive word tokens separated by whitespace only;
    punctuation breaks a run. Each maximal run becomes one phrase whose
    score is the maximum member score. Returns phrase -> score.
    """
    tokens = tokenize(text)
    phrases: dict[str, float] = {}
    run: list[Token] = []

    def flush():
        if not run:
            return
        phrase = " ".join(t.text.lower() for t in run)
        score = max(selected[t.text.lower()] for t in run)
        phrases[phrase] = max(score, phrases.get(phrase, score))
        run.clear()

    for token in tokens:
        hit = is_candidate(token.text, stopwords) and token.text.lower() in selected
        if not hit:
            flush()
            continue
        if run and not text[run[-1].end:token.start].isspace():
            flush()
        run.append(token)
    flush()
    return phrases


def textrank_keywords(text: str, params: TextRankParams,
                      stopwords: frozenset[str]) -> list[Keyword]:
    """Full pipeline: graph, ranking, selection, phrase collapse.

    Output is sorted by score descending then text ascending, so identical
    inputs always yield identical keyword lists.
    """
    graph = build_term_graph(text, params, stopwords)
    if not graph.vertices:
        return []
    ranked = rank_terms(graph, params)
    selected = select_terms(ranked, params)
    phrases = collapse_phrases(text, selected, stopwords)
    keywords = [Keyword(text=phrase, score=score) for phrase, score in phrases.items()]
    keywords.sort(key=lambda k: (-k.score, k.text))
    return keywords
