"""Unigram/bigram count models and the word-length prior.

All lookups are case-insensitive and every score is a base-10 log
probability. Unseen unigrams get the length-dependent penalty
``1 / (total_tokens * 10**len(word))`` so long gibberish loses to short
dictionary words; unseen bigrams back off to the unigram model plus a fixed
additive penalty.
"""

from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple

from ._io import LoadError, PathLike, iter_records

START = "<s>"
END = "</s>"
DEFAULT_BACKOFF_PENALTY = -1.0

_WORD_RE = re.compile(r"[^\W_]+(?:'[^\W_]+)*")


def _parse_count(path, lineno, text):
    try:
        count = int(text)
    except ValueError:
        raise LoadError(path, f"count {text!r} is not an integer", lineno) from None
    if count < 1:
        raise LoadError(path, f"count must be >= 1, got {count}", lineno)
    return count


@dataclass(frozen=True)
class UnigramModel:
    """Word counts with maximum-likelihood scores and a length-based OOV penalty."""

    counts: Mapping[str, int]
    total_tokens: int

    @classmethod
    def from_counts(cls, counts: Mapping[str, int]) -> "UnigramModel":
        merged: Counter = Counter()
        for word, count in counts.items():
            word = word.lower()
            if not word or any(ch.isspace() for ch in word):
                raise ValueError(f"invalid unigram {word!r}")
            if count < 1:
                raise ValueError(f"count for {word!r} must be >= 1")
            merged[word] += int(count)
        if not merged:
            raise ValueError("a unigram model needs at least one word")
        return cls(dict(merged), sum(merged.values()))

    @property
    def vocab_size(self) -> int:
        return len(self.counts)

    def __contains__(self, word: str) -> bool:
        return word.lower() in self.counts

    def count(self, word: str) -> int:
        return self.counts.get(word.lower(), 0)

    def logprob(self, word: str) -> float:
        """Base-10 log probability of ``word``; finite for any non-empty word."""
        if not word:
            raise ValueError("cannot score an empty word")
        count = self.counts.get(word.lower())
        if count is None:
            return -math.log10(self.total_tokens) - len(word)
        return math.log10(count / self.total_tokens)


@dataclass(frozen=True)
class BigramModel:
    """Conditional pair counts with sentence boundary markers ``<s>``/``</s>``."""

    counts: Mapping[Tuple[str, str], int]
    context_totals: Mapping[str, int]
    backoff_penalty: float = DEFAULT_BACKOFF_PENALTY

    @classmethod
    def from_counts(cls, counts: Mapping[Tuple[str, str], int],
                    backoff_penalty: float = DEFAULT_BACKOFF_PENALTY) -> "BigramModel":
        merged: Counter = Counter()
        for (w1, w2), count in counts.items():
            w1, w2 = _norm_token(w1), _norm_token(w2)
            if w2 == START:
                raise ValueError("start marker cannot follow another word")
            if w1 == END:
                raise ValueError("end marker cannot precede another word")
            if count < 1:
                raise ValueError(f"count for ({w1}, {w2}) must be >= 1")
            merged[(w1, w2)] += int(count)
        totals: Counter = Counter()
        for (w1, _), count in merged.items():
            totals[w1] += count
        return cls(dict(merged), dict(totals), backoff_penalty)

    def logprob(self, fallback: UnigramModel, w1: str, w2: str) -> float:
        """``log10 P(w2 | w1)``, backing off to ``fallback`` for unseen pairs."""
        if not w1 or not w2:
            raise ValueError("bigram words must be non-empty")
        w1, w2 = _norm_token(w1), _norm_token(w2)
        count = self.counts.get((w1, w2))
        if count is not None:
            return math.log10(count / self.context_totals[w1])
        return fallback.logprob(w2) + self.backoff_penalty

    def sequence_score(self, fallback: UnigramModel, chunks: Sequence[str]) -> float:
        """Sum of link scores over the chain ``<s> -> c1 -> ... -> cn -> </s>``."""
        if not chunks:
            raise ValueError("cannot score an empty chunk sequence")
        chain = [START, *chunks, END]
        score = 0.0
        for w1, w2 in zip(chain, chain[1:]):
            score += self.logprob(fallback, w1, w2)
        return score


def _norm_token(token: str) -> str:
    return token if token in (START, END) else token.lower()


@dataclass(frozen=True)
class WordLenPrior:
    """Probability of a word having a given character length."""

    probs: Mapping[int, float]
    default_prob: float

    def __post_init__(self):
        for length, p in self.probs.items():
            if length < 1:
                raise ValueError(f"word length must be >= 1, got {length}")
            if not 0.0 < p <= 1.0:
                raise ValueError(f"probability for length {length} out of (0, 1]: {p}")
        if not 0.0 < self.default_prob <= 1.0:
            raise ValueError(f"default probability out of (0, 1]: {self.default_prob}")
        if sum(self.probs.values()) + self.default_prob > 1.0 + 1e-9:
            raise ValueError("word-length probabilities sum to more than 1")

    @property
    def max_length(self) -> int:
        return max(self.probs, default=0)

    def prob(self, length: int) -> float:
        if length < 1:
            raise ValueError(f"word length must be >= 1, got {length}")
        return self.probs.get(length, self.default_prob)

    @classmethod
    def from_words(cls, words: Iterable[str], max_length: int = 15) -> "WordLenPrior":
        """Estimate the prior from a word stream with add-one smoothing.

        Lengths ``1..max_length`` each get a bucket; every longer word falls
        into a shared tail bucket that becomes ``default_prob``. The buckets
        sum to exactly one.
        """
        if max_length < 1:
            raise ValueError("max_length must be >= 1")
        hist: Counter = Counter()
        tail = 0
        for word in words:
            if len(word) > max_length:
                tail += 1
            elif word:
                hist[len(word)] += 1
        denom = sum(hist.values()) + tail + max_length + 1
        probs = {n: (hist[n] + 1) / denom for n in range(1, max_length + 1)}
        return cls(probs, (tail + 1) / denom)

    @classmethod
    def from_corpus(cls, lines: Iterable[str], max_length: int = 15) -> "WordLenPrior":
        """Estimate the prior from raw text lines (tokens are alphanumeric runs)."""
        words = (w for line in lines for w in tokenize_words(line))
        return cls.from_words(words, max_length=max_length)

    def dump(self, path: PathLike) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write("# length\tprobability; '*' is the tail probability\n")
            for length in sorted(self.probs):
                fh.write(f"{length}\t{self.probs[length]:.12g}\n")
            fh.write(f"*\t{self.default_prob:.12g}\n")


def tokenize_words(text: str):
    """Alphanumeric word tokens of ``text`` in order (case preserved)."""
    return _WORD_RE.findall(text)


def load_unigrams(path: PathLike) -> UnigramModel:
    """Read ``word<TAB>count`` lines; duplicate words (case-folded) are summed."""
    counts: Counter = Counter()
    for lineno, line in iter_records(path):
        parts = line.split("\t")
        if len(parts) != 2:
            raise LoadError(path, "expected 'word<TAB>count'", lineno)
        word = parts[0].strip().lower()
        if not word or any(ch.isspace() for ch in word):
            raise LoadError(path, f"invalid word {parts[0]!r}", lineno)
        counts[word] += _parse_count(path, lineno, parts[1].strip())
    if not counts:
        raise LoadError(path, "no unigram records")
    return UnigramModel(dict(counts), sum(counts.values()))


def load_bigrams(path: PathLike,
                 backoff_penalty: float = DEFAULT_BACKOFF_PENALTY) -> BigramModel:
    """Read ``word1 word2<TAB>count`` lines."""
    counts: Dict[Tuple[str, str], int] = {}
    for lineno, line in iter_records(path):
        parts = line.split("\t")
        if len(parts) != 2:
            raise LoadError(path, "expected 'word1 word2<TAB>count'", lineno)
        words = parts[0].split()
        if len(words) != 2:
            raise LoadError(path, f"expected two words, got {parts[0]!r}", lineno)
        w1, w2 = _norm_token(words[0]), _norm_token(words[1])
        if w2 == START or w1 == END:
            raise LoadError(path, "boundary marker in an impossible position", lineno)
        key = (w1, w2)
        counts[key] = counts.get(key, 0) + _parse_count(path, lineno, parts[1].strip())
    if not counts:
        raise LoadError(path, "no bigram records")
    return BigramModel.from_counts(counts, backoff_penalty)


def load_word_len_prior(path: PathLike) -> WordLenPrior:
    """Read ``length<TAB>probability`` lines; ``*`` marks the tail probability.

    Without a ``*`` line the tail probability is the smallest stored one.
    """
    probs: Dict[int, float] = {}
    default: Optional[float] = None
    for lineno, line in iter_records(path):
        parts = line.split("\t")
        if len(parts) != 2:
            raise LoadError(path, "expected 'length<TAB>probability'", lineno)
        try:
            p = float(parts[1])
        except ValueError:
            raise LoadError(path, f"bad probability {parts[1]!r}", lineno) from None
        key = parts[0].strip()
        if key == "*":
            default = p
            continue
        try:
            length = int(key)
        except ValueError:
            raise LoadError(path, f"bad length {key!r}", lineno) from None
        probs[length] = p
    if not probs:
        raise LoadError(path, "no word-length records")
    if default is None:
        default = min(probs.values())
    try:
        return WordLenPrior(probs, default)
    except ValueError as exc:
        raise LoadError(path, str(exc)) from None


def count_ngrams(sentences: Iterable[Sequence[str]]):
    """Unigram and boundary-padded bigram counts of tokenized sentences."""
    unigrams: Counter = Counter()
    bigrams: Counter = Counter()
    for sent in sentences:
        words = [w.lower() for w in sent]
        if not words:
            continue
        unigrams.update(words)
        chain = [START, *words, END]
        bigrams.update(zip(chain, chain[1:]))
    return unigrams, bigrams
