"""Unigram word segmentation and the variable-length sliding-window seeder.

Chunks keep the original casing of the hashtag; every language-model lookup
is case-insensitive. Equal scores are broken by preferring fewer chunks and
then the lexicographically smaller (lowercased) chunk sequence.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .ngram_lm import UnigramModel, WordLenPrior

BRUTE_FORCE_MAX_LEN = 20


@dataclass(frozen=True)
class Segmentation:
    """An ordered split of a hashtag body.

    Attributes
    ----------
    chunks : tuple of str
        Pieces of the body in order, original casing.
    viterbi_score : float
        Sum of unigram log10 probabilities over ``chunks``.
    seed_score : float or None
        Sliding-window score that got the candidate seeded, if any.
    """

    chunks: Tuple[str, ...]
    viterbi_score: float
    seed_score: Optional[float] = None

    @property
    def key(self) -> Tuple[str, ...]:
        return tuple(c.lower() for c in self.chunks)

    @property
    def text(self) -> str:
        return " ".join(self.chunks)

    def __len__(self) -> int:
        return len(self.chunks)


@dataclass(frozen=True)
class WindowTriplet:
    left: str
    window: str
    right: str
    score: Optional[float] = None

    @property
    def start(self) -> int:
        return len(self.left)


@dataclass(frozen=True)
class SeederConfig:
    min_len: int = 2
    max_len: int = 6
    window_constant: float = 1.0
    top_k: int = 20

    def __post_init__(self):
        if not 1 <= self.min_len <= self.max_len:
            raise ValueError(f"need 1 <= min_len <= max_len, got {self.min_len}, {self.max_len}")
        if self.top_k < 1:
            raise ValueError(f"top_k must be >= 1, got {self.top_k}")


def strip_sigil(hashtag: str) -> str:
    return hashtag[1:] if hashtag.startswith("#") else hashtag


def tie_break_key(score: float, chunks) -> tuple:
    """Sort key: higher score first, then fewer chunks, then lexicographic."""
    return (-score, len(chunks), tuple(c.lower() for c in chunks))


def chunk_score(lm: UnigramModel, chunks) -> float:
    score = 0.0
    for chunk in chunks:
        score += lm.logprob(chunk)
    return score


def viterbi_word_seg(lm: UnigramModel, s: str) -> Segmentation:
    """Best unigram segmentation of ``s`` by dynamic programming over split points."""
    s = strip_sigil(s)
    if not s:
        raise ValueError("cannot segment an empty string")
    n = len(s)
    lowered = s.lower()
    # best[i] = (score, n_chunks, lowered chunks, split positions) for s[:i]
    best: List[Optional[tuple]] = [None] * (n + 1)
    best[0] = (0.0, 0, (), ())
    for i in range(1, n + 1):
        winner = None
        for j in range(i):
            prev_score, prev_n, prev_key, prev_cuts = best[j]
            piece = lowered[j:i]
            cand = (prev_score + lm.logprob(piece), prev_n + 1, prev_key + (piece,), prev_cuts + (j,))
            if winner is None or (-cand[0], cand[1], cand[2]) < (-winner[0], winner[1], winner[2]):
                winner = cand
        best[i] = winner
    score, _, _, cuts = best[n]
    bounds = list(cuts) + [n]
    chunks = tuple(s[a:b] for a, b in zip(bounds, bounds[1:]))
    return Segmentation(chunks, score)


def brute_force_best_seg(lm: UnigramModel, s: str) -> Segmentation:
    """Exhaustive search over all ``2**(n-1)`` splits; test oracle for the DP."""
    s = strip_sigil(s)
    if not s:
        raise ValueError("cannot segment an empty string")
    if len(s) > BRUTE_FORCE_MAX_LEN:
        raise ValueError(f"brute force is limited to {BRUTE_FORCE_MAX_LEN} characters")
    n = len(s)
    best_key = None
    best = None
    for mask in itertools.product((False, True), repeat=n - 1):
        cuts = [0] + [i + 1 for i, cut in enumerate(mask) if cut] + [n]
        chunks = tuple(s[a:b] for a, b in zip(cuts, cuts[1:]))
        score = chunk_score(lm, chunks)
        key = tie_break_key(score, chunks)
        if best_key is None or key < best_key:
            best_key, best = key, Segmentation(chunks, score)
    return best


def enumerate_windows(body: str, cfg: SeederConfig = SeederConfig()) -> List[WindowTriplet]:
    """All ``(left, window, right)`` placements with ``min_len <= len(window) <= max_len``."""
    n = len(body)
    triplets = []
    for length in range(cfg.min_len, min(cfg.max_len, n) + 1):
        for start in range(n - length + 1):
            end = start + length
            triplets.append(WindowTriplet(body[:start], body[start:end], body[end:]))
    return triplets


class _SegCache:
    """Per-hashtag memo of Viterbi results for the sides of each window."""

    def __init__(self, lm: UnigramModel):
        self.lm = lm
        self._memo: Dict[str, Segmentation] = {}

    def __call__(self, s: str) -> Segmentation:
        if not s:
            return Segmentation((), 0.0)
        seg = self._memo.get(s)
        if seg is None:
            seg = self._memo[s] = viterbi_word_seg(self.lm, s)
        return seg


def sliding_window_score(lm: UnigramModel, prior: WordLenPrior, t: WindowTriplet,
                         cfg: SeederConfig = SeederConfig(), _best=None) -> float:
    """Viterbi score of both sides plus the length-weighted window log probability."""
    best = _best or _SegCache(lm)
    middle = cfg.window_constant * lm.logprob(t.window) * prior.prob(len(t.window))
    return best(t.left).viterbi_score + middle + best(t.right).viterbi_score


def seed_segmentations(lm: UnigramModel, prior: WordLenPrior, hashtag: str,
                       cfg: SeederConfig = SeederConfig()) -> List[Segmentation]:
    """Top-k candidate segmentations of a hashtag, best first.

    Each window placement proposes ``BestSeg(left) + [window] + BestSeg(right)``
    scored by :func:`sliding_window_score`. The plain Viterbi segmentation is
    always added so that bodies too short for any window still get a
    candidate. Duplicates keep their highest score.
    """
    body = strip_sigil(hashtag)
    if not body:
        raise ValueError("empty hashtag body")
    best = _SegCache(lm)
    pool: Dict[Tuple[str, ...], Segmentation] = {}

    def offer(chunks, seed_score):
        key = tuple(c.lower() for c in chunks)
        current = pool.get(key)
        if current is None or seed_score > current.seed_score:
            pool[key] = Segmentation(tuple(chunks), chunk_score(lm, chunks), seed_score)

    for t in enumerate_windows(body, cfg):
        score = sliding_window_score(lm, prior, t, cfg, _best=best)
        offer(best(t.left).chunks + (t.window,) + best(t.right).chunks, score)

    vit = best(body)
    offer(vit.chunks, vit.viterbi_score)
    ranked = sorted(pool.values(), key=lambda seg: tie_break_key(seg.seed_score, seg.chunks))
    top = ranked[: cfg.top_k]
    if not any(seg.key == vit.key for seg in top):
        top[-1] = pool[vit.key]
    return top
