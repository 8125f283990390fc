"""Candidate ranking and the end-to-end hashtag segmentation estimator."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from .elastic_net import ElasticNetModel, TrainingError, cross_validate, train_elastic_net
from .features import FEATURE_NAMES, FeatureVector, prepare_context, score_candidate
from .knowledge_base import EntityLink
from .resources import Resources, bundled_resources
from .segmentation import Segmentation, seed_segmentations, tie_break_key

DEFAULT_ALPHA_GRID = (0.0001, 0.001, 0.01, 0.1)
DEFAULT_RHO_GRID = (0.1, 0.5, 0.9)


@dataclass(frozen=True)
class ScoredCandidate:
    segmentation: Segmentation
    features: FeatureVector
    links: Tuple[EntityLink, ...] = ()


@dataclass(frozen=True)
class RankedCandidate(ScoredCandidate):
    score: float = 0.0


@dataclass
class AnnotationResult:
    hashtag: str
    candidates: List[RankedCandidate] = field(default_factory=list)

    @property
    def top(self) -> Optional[RankedCandidate]:
        return self.candidates[0] if self.candidates else None

    @property
    def links(self) -> List[EntityLink]:
        return list(self.top.links) if self.candidates else []

    def ranked_chunks(self) -> List[Tuple[str, ...]]:
        return [c.segmentation.chunks for c in self.candidates]


def candidate_table(res: Resources, hashtag: str, tweet_text: str) -> List[ScoredCandidate]:
    """Seed candidates for one hashtag and compute their features and links."""
    context = prepare_context(res, hashtag, tweet_text)
    table = []
    for seg in seed_segmentations(res.unigrams, res.prior, hashtag, res.seeder):
        fv, links = score_candidate(res, seg, hashtag, tweet_text, context)
        table.append(ScoredCandidate(seg, fv, tuple(links)))
    return table


def feature_matrix(candidates: Sequence[ScoredCandidate], columns=None) -> np.ndarray:
    X = np.array([c.features for c in candidates], dtype=float).reshape(-1, len(FEATURE_NAMES))
    return X if columns is None else X[:, list(columns)]


def unweighted_model(X) -> ElasticNetModel:
    """Equal weights on features standardized over ``X`` itself."""
    X = np.atleast_2d(np.asarray(X, dtype=float))
    means = X.mean(axis=0)
    stds = X.std(axis=0)
    stds[stds < 1e-12] = 1.0
    return ElasticNetModel(np.ones(X.shape[1]), 0.0, 0.0, means, stds)


def rank(model: ElasticNetModel, candidates: Sequence[ScoredCandidate], hashtag: str = "",
         columns=None) -> AnnotationResult:
    """Order candidates by regression score, best first.

    Equal scores prefer fewer chunks, then the lexicographically smaller
    chunk sequence.
    """
    if not candidates:
        return AnnotationResult(hashtag, [])
    scores = model.predict(feature_matrix(candidates, columns))
    ranked = [RankedCandidate(c.segmentation, c.features, c.links, float(s))
              for c, s in zip(candidates, scores)]
    ranked.sort(key=lambda rc: tie_break_key(rc.score, rc.segmentation.chunks))
    return AnnotationResult(hashtag, ranked)


def _gold_keys(gold) -> set:
    """Normalize one gold segmentation or a collection of them to lowercase tuples."""
    if gold and isinstance(gold[0], str):
        gold = [gold]
    return {tuple(c.lower() for c in g) for g in gold}


def training_rows(tables: Iterable[Sequence[ScoredCandidate]], golds: Iterable, columns=None):
    """Stack candidate features with 1/0 labels and a per-hashtag group id."""
    Xs, ys, groups = [], [], []
    for gid, (table, gold) in enumerate(zip(tables, golds)):
        keys = _gold_keys(gold)
        if not table:
            continue
        Xs.append(feature_matrix(table, columns))
        ys.extend(1.0 if c.segmentation.key in keys else 0.0 for c in table)
        groups.extend([gid] * len(table))
    if not Xs:
        raise TrainingError("no training candidates")
    return np.vstack(Xs), np.array(ys), np.array(groups)


def fit_ranker(X, y, groups, alpha_grid=DEFAULT_ALPHA_GRID, rho_grid=DEFAULT_RHO_GRID,
               cv: int = 5, seed: int = 0, tol: float = 1e-6,
               max_iter: int = 10000) -> ElasticNetModel:
    """Choose ``alpha``/``rho`` by grouped cross-validation, then refit on everything."""
    alpha, rho = cross_validate(X, y, alpha_grid, rho_grid, folds=cv, seed=seed, groups=groups,
                                tol=tol, max_iter=max_iter)
    return train_elastic_net(X, y, alpha, rho, tol=tol, max_iter=max_iter)


class HashtagSegmenter(BaseEstimator):
    """Context-aware hashtag segmenter and entity linker.

    ``X`` is a sequence of ``(hashtag, tweet_text)`` pairs; ``y`` holds the
    gold segmentation of each hashtag, either one chunk sequence or a list of
    acceptable chunk sequences.

    Parameters
    ----------
    resources : Resources, optional
        Loaded language models, KB, taxonomy and seeder settings. The
        bundled fixture resources are used when omitted.
    alpha_grid, rho_grid : sequence of float
        Hyperparameter grid searched by grouped cross-validation.
    cv : int
        Number of cross-validation folds.
    random_state : int
        Seed of the fold assignment.
    columns : sequence of int, optional
        Subset of feature columns to use; all five by default.
    """

    def __init__(self, resources: Optional[Resources] = None, alpha_grid=DEFAULT_ALPHA_GRID,
                 rho_grid=DEFAULT_RHO_GRID, cv=5, random_state=0, columns=None,
                 tol=1e-6, max_iter=10000):
        self.resources = resources
        self.alpha_grid = alpha_grid
        self.rho_grid = rho_grid
        self.cv = cv
        self.random_state = random_state
        self.columns = columns
        self.tol = tol
        self.max_iter = max_iter

    def _res(self) -> Resources:
        if self.resources is not None:
            return self.resources
        if getattr(self, "resources_", None) is None:
            self.resources_ = bundled_resources()
        return self.resources_

    def candidate_tables(self, X) -> List[List[ScoredCandidate]]:
        res = self._res()
        return [candidate_table(res, hashtag, tweet) for hashtag, tweet in X]

    def fit(self, X, y):
        X = list(X)
        y = list(y)
        if len(X) != len(y):
            raise ValueError(f"{len(X)} inputs but {len(y)} gold segmentations")
        tables = self.candidate_tables(X)
        rows, labels, groups = training_rows(tables, y, self.columns)
        self.model_ = fit_ranker(rows, labels, groups, self.alpha_grid, self.rho_grid,
                                 self.cv, self.random_state, self.tol, self.max_iter)
        self.alpha_ = self.model_.alpha
        self.rho_ = self.model_.rho
        self.n_features_in_ = rows.shape[1]
        return self

    def annotate(self, hashtag: str, tweet_text: str, model: Optional[ElasticNetModel] = None
                 ) -> AnnotationResult:
        table = candidate_table(self._res(), hashtag, tweet_text)
        if model is None:
            check_is_fitted(self, "model_")
            model = self.model_
        return rank(model, table, hashtag, self.columns)

    def predict(self, X) -> List[Tuple[str, ...]]:
        """Top-ranked chunk sequence for each ``(hashtag, tweet_text)`` pair."""
        check_is_fitted(self, "model_")
        return [self.annotate(h, t).top.segmentation.chunks for h, t in X]

    def score(self, X, y) -> float:
        """Precision at 1 against the gold segmentations."""
        preds = self.predict(X)
        hits = [tuple(c.lower() for c in p) in _gold_keys(g) for p, g in zip(preds, y)]
        return float(np.mean(hits)) if hits else 0.0
