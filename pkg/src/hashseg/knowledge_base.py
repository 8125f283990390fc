"""Page/inlink/anchor-prior store with link-based relatedness and voting disambiguation."""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Mapping, Optional, Sequence, Tuple

from ._io import LoadError, PathLike, iter_records

DEFAULT_THRESHOLD = 0.1
MAX_MENTION_TOKENS = 4
_PRIOR_TOLERANCE = 1e-9


@dataclass(frozen=True)
class KbPage:
    id: str
    title: str
    inlinks: FrozenSet[str] = frozenset()


@dataclass(frozen=True)
class Mention:
    """A dictionary hit over tokens ``start:end`` (end exclusive)."""

    surface: str
    start: int
    end: int


@dataclass(frozen=True)
class EntityLink:
    mention: Mention
    page: str
    score: float


class Kb:
    """Immutable knowledge base.

    Parameters
    ----------
    pages : mapping of page id to :class:`KbPage`
    mentions : mapping of surface string to ``[(page_id, prior), ...]``
        Surfaces are case-folded on construction.
    total_pages : int, optional
        Page count of the full collection the subset was cut from; defaults
        to the number of stored pages.
    """

    def __init__(self, pages: Mapping[str, KbPage],
                 mentions: Mapping[str, Sequence[Tuple[str, float]]],
                 total_pages: Optional[int] = None):
        self.pages: Dict[str, KbPage] = dict(pages)
        folded: Dict[str, Dict[str, float]] = {}
        for surface, cands in mentions.items():
            key = " ".join(surface.lower().split())
            bucket = folded.setdefault(key, {})
            for page_id, prior in cands:
                if page_id not in self.pages:
                    raise ValueError(f"mention {surface!r} points to unknown page {page_id!r}")
                if not 0.0 < prior <= 1.0:
                    raise ValueError(f"prior for {surface!r} -> {page_id!r} out of (0, 1]: {prior}")
                bucket[page_id] = bucket.get(page_id, 0.0) + prior
        self.mentions: Dict[str, List[Tuple[str, float]]] = {}
        for key, bucket in folded.items():
            if sum(bucket.values()) > 1.0 + _PRIOR_TOLERANCE:
                raise ValueError(f"priors for mention {key!r} sum to more than 1")
            self.mentions[key] = sorted(bucket.items(), key=lambda kv: (-kv[1], kv[0]))
        self.total_pages = len(self.pages) if total_pages is None else int(total_pages)
        if self.total_pages < len(self.pages):
            raise ValueError("total_pages is smaller than the number of stored pages")
        self._max_mention_tokens = max((len(k.split()) for k in self.mentions), default=0)
        self._rel_cache: Dict[Tuple[str, str], float] = {}
        self._lock = threading.Lock()

    def __deepcopy__(self, memo):
        # immutable after construction
        return self

    def __getstate__(self):
        state = self.__dict__.copy()
        del state["_lock"]
        return state

    def __setstate__(self, state):
        self.__dict__.update(state)
        self._lock = threading.Lock()

    def __repr__(self):
        return f"Kb(pages={len(self.pages)}, mentions={len(self.mentions)}, W={self.total_pages})"

    def title(self, page_id: str) -> str:
        return self.pages[page_id].title

    def candidate_pages(self, surface: str) -> List[Tuple[str, float]]:
        """Candidate pages for a surface string, highest prior first."""
        return list(self.mentions.get(" ".join(surface.lower().split()), ()))

    def prior(self, surface: str, page_id: str) -> float:
        for pid, p in self.candidate_pages(surface):
            if pid == page_id:
                return p
        return 0.0

    def relatedness(self, pa: str, pb: str) -> float:
        """Inlink-overlap relatedness in ``[0, 1]`` (symmetric)."""
        for pid in (pa, pb):
            if pid not in self.pages:
                raise KeyError(f"unknown page {pid!r}")
        key = (pa, pb) if pa <= pb else (pb, pa)
        cached = self._rel_cache.get(key)
        if cached is None:
            cached = milne_witten(self.pages[key[0]].inlinks, self.pages[key[1]].inlinks,
                                  self.total_pages)
            with self._lock:
                self._rel_cache[key] = cached
        return cached

    def vote(self, voter_surface: str, pa: str) -> float:
        """Prior-weighted mean relatedness of the voter's candidates to ``pa``."""
        cands = self.candidate_pages(voter_surface)
        if not cands:
            return 0.0
        return sum(self.relatedness(pb, pa) * prior for pb, prior in cands) / len(cands)

    def total_relatedness(self, pa: str, context_mentions: Sequence[str]) -> float:
        return sum(self.vote(b, pa) for b in context_mentions)

    def extract_mentions(self, tokens: Sequence[str],
                         max_tokens: int = MAX_MENTION_TOKENS) -> List[Mention]:
        """Greedy left-to-right longest dictionary match over token n-grams."""
        limit = min(max_tokens, self._max_mention_tokens)
        found = []
        i = 0
        lowered = [t.lower() for t in tokens]
        while i < len(lowered):
            for width in range(min(limit, len(lowered) - i), 0, -1):
                surface = " ".join(lowered[i:i + width])
                if surface in self.mentions:
                    found.append(Mention(surface, i, i + width))
                    i += width
                    break
            else:
                i += 1
        return found

    def link_hashtag_entities(self, seg_chunks: Sequence[str], tweet_mentions: Sequence[str],
                              threshold: float = DEFAULT_THRESHOLD):
        """Disambiguate hashtag mentions against the tweet context.

        Returns
        -------
        links : list of EntityLink
            Detected pages whose total relatedness reaches ``threshold``.
        score : float
            Mean over hashtag mentions of ``rel * prior`` for the detected
            page; pruning does not change it.
        """
        hashtag_mentions = self.extract_mentions(seg_chunks)
        if not hashtag_mentions:
            return [], 0.0
        links = []
        total = 0.0
        for m in hashtag_mentions:
            page, rel, prior = self.disambiguate(m.surface, tweet_mentions)
            rel = min(rel, 1.0)
            total += rel * prior
            if rel >= threshold:
                links.append(EntityLink(m, page, rel))
        return links, total / len(hashtag_mentions)

    def disambiguate(self, surface: str, context_mentions: Sequence[str]):
        """``(page, total_relatedness, prior)`` of the best-supported candidate.

        Ties on relatedness go to the higher prior, then the smaller page id.
        """
        best = None
        for pid, prior in self.candidate_pages(surface):
            rel = self.total_relatedness(pid, context_mentions)
            key = (-rel, -prior, pid)
            if best is None or key < best[0]:
                best = (key, pid, rel, prior)
        if best is None:
            raise KeyError(f"no candidates for {surface!r}")
        return best[1], best[2], best[3]


def milne_witten(in_a: FrozenSet[str], in_b: FrozenSet[str], total_pages: int) -> float:
    """``1 - delta`` on inlink sets, clamped to ``[0, 1]``.

    Empty sets or an empty intersection give 0.
    """
    if not in_a or not in_b:
        return 0.0
    common = len(in_a & in_b)
    if common == 0:
        return 0.0
    big, small = max(len(in_a), len(in_b)), min(len(in_a), len(in_b))
    num = math.log(big) - math.log(common)
    den = math.log(total_pages) - math.log(small)
    if den <= 0.0:
        return 1.0 if num == 0.0 else 0.0
    return min(1.0, max(0.0, 1.0 - num / den))


def load_kb(pages_path: PathLike, mentions_path: PathLike, inlinks_path: PathLike,
            total_pages_override: Optional[int] = None) -> Kb:
    """Load and cross-check the three KB files."""
    titles: Dict[str, str] = {}
    for lineno, line in iter_records(pages_path):
        parts = line.split("\t")
        if len(parts) != 2 or not parts[0].strip():
            raise LoadError(pages_path, "expected 'page_id<TAB>title'", lineno)
        pid = parts[0].strip()
        if pid in titles:
            raise LoadError(pages_path, f"duplicate page id {pid!r}", lineno)
        titles[pid] = parts[1].strip()

    inlinks: Dict[str, set] = {pid: set() for pid in titles}
    for lineno, line in iter_records(inlinks_path):
        parts = line.split("\t")
        if len(parts) != 2:
            raise LoadError(inlinks_path, "expected 'page_id<TAB>sources'", lineno)
        pid = parts[0].strip()
        if pid not in titles:
            raise LoadError(inlinks_path, f"inlinks for unknown page {pid!r}", lineno)
        for src in parts[1].split(","):
            src = src.strip()
            if not src:
                continue
            if src not in titles:
                raise LoadError(inlinks_path, f"unknown source page {src!r} for {pid!r}", lineno)
            inlinks[pid].add(src)

    mentions: Dict[str, List[Tuple[str, float]]] = {}
    for lineno, line in iter_records(mentions_path):
        parts = line.split("\t")
        if len(parts) != 3:
            raise LoadError(mentions_path, "expected 'surface<TAB>page_id<TAB>prior'", lineno)
        surface, pid = parts[0].strip(), parts[1].strip()
        if pid not in titles:
            raise LoadError(mentions_path,
                            f"mention {surface!r} references unknown page {pid!r}", lineno)
        try:
            prior = float(parts[2])
        except ValueError:
            raise LoadError(mentions_path, f"bad prior {parts[2]!r} for {surface!r}", lineno) from None
        if not 0.0 < prior <= 1.0:
            raise LoadError(mentions_path, f"prior {prior} for {surface!r} out of (0, 1]", lineno)
        mentions.setdefault(surface, []).append((pid, prior))

    pages = {pid: KbPage(pid, title, frozenset(inlinks[pid])) for pid, title in titles.items()}
    try:
        return Kb(pages, mentions, total_pages_override)
    except ValueError as exc:
        raise LoadError(mentions_path, str(exc)) from None
