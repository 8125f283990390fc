"""Per-candidate feature vectors: unigram, bigram, context, capitalization, relatedness."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from .context import context_score
from .knowledge_base import EntityLink
from .ngram_lm import tokenize_words
from .resources import Resources
from .segmentation import Segmentation, strip_sigil

FEATURE_NAMES = ("unigram", "bigram", "context", "capitalization", "relatedness")


class FeatureVector(NamedTuple):
    unigram: float
    bigram: float
    context: float
    capitalization: float
    relatedness: float

    def as_array(self) -> np.ndarray:
        return np.array(self, dtype=float)


@dataclass(frozen=True)
class Cluster:
    """Capitalization-derived span ``body[start:end]`` that should stay in one chunk."""

    text: str
    start: int
    end: int


def capitalization_clusters(raw_hashtag: str) -> List[Cluster]:
    """Assumed clusters of a mixed-case hashtag body.

    Runs of two or more capitals form one cluster ("UCB" in "followUCBleague").
    A lone capital opens a cluster that runs up to the next capital
    ("Something", "Good" in "SomethingGood"). Bodies whose letters are all
    lowercase or all uppercase carry no capitalization information.
    """
    body = strip_sigil(raw_hashtag)
    letters = [c for c in body if c.isalpha()]
    if not any(c.isupper() for c in letters) or not any(c.islower() for c in letters):
        return []
    clusters = []
    n = len(body)
    i = 0
    while i < n:
        if not body[i].isupper():
            i += 1
            continue
        j = i
        while j < n and body[j].isupper():
            j += 1
        if j - i == 1:
            while j < n and not body[j].isupper():
                j += 1
        clusters.append(Cluster(body[i:j], i, j))
        i = j
    return clusters


def _chunk_spans(body: str, chunks: Sequence[str]) -> List[Tuple[int, int]]:
    if "".join(chunks).lower() != body.lower():
        raise ValueError(f"chunks {list(chunks)!r} do not reconstruct {body!r}")
    spans = []
    pos = 0
    for c in chunks:
        spans.append((pos, pos + len(c)))
        pos += len(c)
    return spans


def capitalization_score(raw_hashtag: str, chunks: Sequence[str]) -> int:
    """Number of assumed clusters not contained in a single chunk."""
    body = strip_sigil(raw_hashtag)
    spans = _chunk_spans(body, chunks)
    broken = 0
    for cl in capitalization_clusters(body):
        if not any(a <= cl.start and cl.end <= b for a, b in spans):
            broken += 1
    return broken


@dataclass(frozen=True)
class TweetContext:
    """Tweet text with the hashtag removed, plus its KB mention surfaces."""

    text: str
    mentions: Tuple[str, ...]


def prepare_context(res: Resources, raw_hashtag: str, tweet_text: str) -> TweetContext:
    body = strip_sigil(raw_hashtag)
    text = re.sub("#" + re.escape(body) + r"(?!\w)", " ", tweet_text, flags=re.IGNORECASE)
    tokens = tokenize_words(text)
    mentions = tuple(m.surface for m in res.kb.extract_mentions(tokens))
    return TweetContext(text, mentions)


def score_candidate(res: Resources, candidate: Segmentation, raw_hashtag: str,
                    tweet_text: str, context: Optional[TweetContext] = None
                    ) -> Tuple[FeatureVector, List[EntityLink]]:
    """Feature vector of a candidate together with its entity links."""
    if context is None:
        context = prepare_context(res, raw_hashtag, tweet_text)
    chunks = candidate.chunks
    links, relatedness = res.kb.link_hashtag_entities(chunks, context.mentions,
                                                      res.rel_threshold)
    fv = FeatureVector(
        unigram=candidate.viterbi_score,
        bigram=res.bigrams.sequence_score(res.unigrams, chunks),
        context=context_score(res.taxonomy, res.lexicon, chunks, context.text),
        capitalization=1.0 / (1.0 + capitalization_score(raw_hashtag, chunks)),
        relatedness=relatedness,
    )
    return fv, links


def extract_features(res: Resources, candidate: Segmentation, raw_hashtag: str,
                     tweet_text: str) -> FeatureVector:
    return score_candidate(res, candidate, raw_hashtag, tweet_text)[0]
