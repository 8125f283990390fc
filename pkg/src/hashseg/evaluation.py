"""Synthetic hashtag datasets, P@n and linking P/R/F, and k-fold evaluation."""

from __future__ import annotations

import json
import logging
import random
import re
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from ._io import LoadError, PathLike, iter_records
from .elastic_net import TrainingError, fold_assignment
from .ranker import (DEFAULT_ALPHA_GRID, DEFAULT_RHO_GRID, ScoredCandidate, candidate_table,
                     fit_ranker, rank, training_rows)
from .resources import Resources

logger = logging.getLogger(__name__)

P_AT_N = (1, 2, 3, 5, 10, 20)
MAX_EXTRA_WORDS = 3
ENTITY_FREE_WIDTH = (2, 4)

_NON_WORD = re.compile(r"[^\w]+")


@dataclass(frozen=True)
class AnnotatedTweet:
    """Whitespace-tokenized tweet with entity spans ``(start, end, page_id)``, end exclusive."""

    text: str
    entities: Tuple[Tuple[int, int, str], ...] = ()

    def __post_init__(self):
        n = len(self.tokens)
        last_end = 0
        for start, end, _ in sorted(self.entities):
            if not 0 <= start < end <= n:
                raise ValueError(f"entity span {start}:{end} outside {n} tokens")
            if start < last_end:
                raise ValueError(f"entity span {start}:{end} overlaps another entity")
            last_end = end

    @property
    def tokens(self) -> List[str]:
        return self.text.split()


@dataclass(frozen=True)
class LabeledInstance:
    hashtag: str
    gold_chunks: Tuple[str, ...]
    gold_links: Tuple[Tuple[str, str], ...]
    tweet_context: str

    @property
    def golds(self) -> set:
        return {tuple(c.lower() for c in self.gold_chunks)}


def load_annotated_tweets(path: PathLike) -> List[AnnotatedTweet]:
    """Read ``text<TAB>start:end:page_id[,...]`` lines; ``-`` marks no entities."""
    tweets = []
    for lineno, line in iter_records(path):
        parts = line.split("\t")
        if len(parts) != 2:
            raise LoadError(path, "expected 'text<TAB>entities'", lineno)
        text, spans = parts[0].strip(), parts[1].strip()
        entities = []
        if spans != "-":
            for item in spans.split(","):
                fields = item.strip().split(":", 2)
                try:
                    entities.append((int(fields[0]), int(fields[1]), fields[2]))
                except (IndexError, ValueError):
                    raise LoadError(path, f"bad entity span {item!r}", lineno) from None
        try:
            tweets.append(AnnotatedTweet(text, tuple(entities)))
        except ValueError as exc:
            raise LoadError(path, str(exc), lineno) from None
    return tweets


def dump_annotated_tweets(tweets: Sequence[AnnotatedTweet], path: PathLike) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for t in tweets:
            spans = ",".join(f"{s}:{e}:{p}" for s, e, p in t.entities) or "-"
            fh.write(f"{t.text}\t{spans}\n")


def _clean(token: str) -> str:
    return _NON_WORD.sub("", token).replace("_", "")


def synthesize_dataset(tweets: Sequence[AnnotatedTweet], seed: int = 0) -> List[LabeledInstance]:
    """Turn entity-annotated tweets into labeled synthetic hashtags.

    Every entity is glued to 0-3 neighbouring words into one unspaced hashtag
    whose gold chunks are the joined words; the rest of the tweet is the
    context. Tweets without entities yield one hashtag of 2-4 consecutive
    words. Tweets with fewer than two tokens are skipped.
    """
    rng = random.Random(seed)
    instances = []
    skipped = 0
    for tweet in tweets:
        tokens = tweet.tokens
        n = len(tokens)
        if n < 2:
            skipped += 1
            continue
        spans = []
        if tweet.entities:
            for start, end, _ in sorted(tweet.entities):
                extra = rng.randint(0, MAX_EXTRA_WORDS)
                left = rng.randint(0, extra)
                spans.append(_cover(tweet.entities, max(0, start - left),
                                    min(n, end + extra - left)))
        else:
            width = rng.randint(*ENTITY_FREE_WIDTH)
            width = min(width, n)
            start = rng.randint(0, n - width)
            spans.append((start, start + width))
        for lo, hi in spans:
            chunks = tuple(c for c in (_clean(t) for t in tokens[lo:hi]) if c)
            if not chunks:
                skipped += 1
                continue
            links = tuple((" ".join(_clean(t) for t in tokens[s:e]), pid)
                          for s, e, pid in sorted(tweet.entities) if lo <= s and e <= hi)
            context = " ".join(tokens[:lo] + tokens[hi:])
            instances.append(LabeledInstance("".join(chunks), chunks, links, context))
    if skipped:
        logger.warning("skipped %d tweet(s) too short to form a hashtag", skipped)
    return instances


def _cover(entities, lo, hi):
    """Grow ``[lo, hi)`` until no entity is only partly inside it."""
    changed = True
    while changed:
        changed = False
        for s, e, _ in entities:
            if s < hi and e > lo and (s < lo or e > hi):
                lo, hi = min(lo, s), max(hi, e)
                changed = True
    return lo, hi


def gold_rank(ranked_chunks: Sequence[Sequence[str]], golds) -> Optional[int]:
    """1-based rank of the first gold segmentation, or None."""
    keys = {tuple(c.lower() for c in g) for g in golds}
    for i, chunks in enumerate(ranked_chunks, start=1):
        if tuple(c.lower() for c in chunks) in keys:
            return i
    return None


def hit_at_n(ranked_chunks, golds, n: int) -> int:
    if n < 1:
        raise ValueError("n must be >= 1")
    r = gold_rank(ranked_chunks[:n], golds)
    return int(r is not None)


def precision_at_n(rankings: Sequence, golds: Sequence, n: int) -> float:
    """Fraction of instances with a gold segmentation among their top ``n``."""
    if not rankings:
        return 0.0
    return sum(hit_at_n(r, g, n) for r, g in zip(rankings, golds)) / len(rankings)


def _link_counts(predicted, gold):
    pred_pages = {pid for _, pid in predicted}
    gold_pages = {pid for _, pid in gold}
    return len(pred_pages & gold_pages), len(pred_pages), len(gold_pages)


def _prf(correct, n_pred, n_gold):
    precision = correct / n_pred if n_pred else 1.0
    recall = correct / n_gold if n_gold else 1.0
    f1 = 2 * precision * recall / (precision + recall) if precision + recall else 0.0
    return precision, recall, f1


def linking_prf(predicted: Sequence[Tuple[str, str]], gold: Sequence[Tuple[str, str]]):
    """Page-level precision, recall and F1 of predicted ``(surface, page_id)`` links.

    An empty prediction has precision 1; an empty gold set has recall 1.
    """
    return _prf(*_link_counts(predicted, gold))


@dataclass
class EvalReport:
    n_instances: int
    folds: int
    p_at_n: Dict[int, float]
    linking_precision: float
    linking_recall: float
    linking_f1: float
    per_fold: List[dict] = field(default_factory=list)

    def key_values(self) -> Dict[str, object]:
        out: Dict[str, object] = {"instances": self.n_instances, "folds": self.folds}
        for n in sorted(self.p_at_n):
            out[f"p_at_{n}"] = round(self.p_at_n[n], 6)
        out["link_precision"] = round(self.linking_precision, 6)
        out["link_recall"] = round(self.linking_recall, 6)
        out["link_f1"] = round(self.linking_f1, 6)
        return out

    def to_text(self) -> str:
        lines = ["[report]"]
        lines += [f"{k}={_fmt(v)}" for k, v in self.key_values().items()]
        for fold in self.per_fold:
            lines.append("")
            lines.append(f"[fold {fold['fold']}]")
            lines += [f"{k}={_fmt(v)}" for k, v in fold.items() if k != "fold"]
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        doc = dict(self.key_values())
        doc["per_fold"] = self.per_fold
        return json.dumps(doc, sort_keys=False)


def _fmt(v):
    return f"{v:.6f}" if isinstance(v, float) else str(v)


class _Tally:
    def __init__(self):
        self.n = 0
        self.hits = {n: 0 for n in P_AT_N}
        self.correct = self.n_pred = self.n_gold = 0

    def add(self, result, inst: LabeledInstance):
        self.n += 1
        r = gold_rank(result.ranked_chunks(), inst.golds)
        for n in P_AT_N:
            self.hits[n] += int(r is not None and r <= n)
        predicted = [(link.mention.surface, link.page) for link in result.links]
        c, p, g = _link_counts(predicted, inst.gold_links)
        self.correct += c
        self.n_pred += p
        self.n_gold += g

    def summary(self):
        p_at = {n: self.hits[n] / self.n if self.n else 0.0 for n in P_AT_N}
        return p_at, _prf(self.correct, self.n_pred, self.n_gold)


def build_tables(dataset: Sequence[LabeledInstance], res: Resources) -> List[List[ScoredCandidate]]:
    return [candidate_table(res, inst.hashtag, inst.tweet_context) for inst in dataset]


def kfold_evaluate(dataset: Sequence[LabeledInstance], res: Resources, folds: int = 5,
                   seed: int = 0, alpha_grid=DEFAULT_ALPHA_GRID, rho_grid=DEFAULT_RHO_GRID,
                   columns=None, inner_folds: int = 5, tables=None) -> EvalReport:
    """Cross-validated P@n and linking scores.

    Each fold's ranker is trained (with its own inner hyperparameter search)
    on the other folds and applied to the held-out instances. Linking
    counts are pooled over all instances before computing P/R/F.
    """
    if folds < 2:
        raise ValueError("need at least 2 folds")
    if len(dataset) < folds:
        raise TrainingError(f"{len(dataset)} instances cannot fill {folds} folds")
    if tables is None:
        tables = build_tables(dataset, res)
    ids = fold_assignment(len(dataset), folds, seed)
    overall = _Tally()
    per_fold = []
    for f in range(folds):
        train = [i for i in range(len(dataset)) if ids[i] != f]
        test = [i for i in range(len(dataset)) if ids[i] == f]
        X, y, groups = training_rows([tables[i] for i in train],
                                     [dataset[i].gold_chunks for i in train], columns)
        inner = min(inner_folds, len(set(groups.tolist())))
        if inner >= 2:
            model = fit_ranker(X, y, groups, alpha_grid, rho_grid, inner, seed)
        else:
            model = fit_ranker(X, y, groups, alpha_grid[:1], rho_grid[:1], 2, seed)
        tally = _Tally()
        for i in test:
            result = rank(model, tables[i], dataset[i].hashtag, columns)
            tally.add(result, dataset[i])
            overall.add(result, dataset[i])
        p_at, (lp, lr, lf) = tally.summary()
        fold_info = {"fold": f + 1, "instances": tally.n, "alpha": model.alpha, "rho": model.rho}
        fold_info.update({f"p_at_{n}": round(p_at[n], 6) for n in P_AT_N})
        fold_info.update(link_precision=round(lp, 6), link_recall=round(lr, 6),
                         link_f1=round(lf, 6))
        per_fold.append(fold_info)
    p_at, (lp, lr, lf) = overall.summary()
    return EvalReport(len(dataset), folds, p_at, lp, lr, lf, per_fold)
