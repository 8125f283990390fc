"""Elastic-net linear regression fitted by cyclic coordinate descent.

The objective, on standardized features ``Z`` and without an intercept, is::

    1/(2n) ||Z w - y||^2 + alpha * rho * ||w||_1 + alpha * (1 - rho) / 2 * ||w||^2
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import List, Sequence, Tuple

import numpy as np
from sklearn.base import BaseEstimator, RegressorMixin
from sklearn.utils.validation import check_array, check_is_fitted, check_X_y

from ._io import LoadError, PathLike

MODEL_FORMAT_VERSION = 1
MIN_TRAIN_SAMPLES = 5


class TrainingError(ValueError):
    pass


def soft_threshold(x: float, t: float) -> float:
    if x > t:
        return x - t
    if x < -t:
        return x + t
    return 0.0


def objective(Z: np.ndarray, y: np.ndarray, w: np.ndarray, alpha: float, rho: float) -> float:
    r = Z @ w - y
    n = Z.shape[0]
    return (r @ r / (2.0 * n) + alpha * rho * np.abs(w).sum()
            + 0.5 * alpha * (1.0 - rho) * (w @ w))


@dataclass
class ElasticNetModel:
    """Learned weights plus the standardization that produced them."""

    weights: np.ndarray
    alpha: float
    rho: float
    feature_means: np.ndarray
    feature_stds: np.ndarray
    n_iter: int = 0
    objective_history: List[float] = field(default_factory=list)

    @property
    def n_features(self) -> int:
        return len(self.weights)

    def standardize(self, X) -> np.ndarray:
        X = np.atleast_2d(np.asarray(X, dtype=float))
        return (X - self.feature_means) / self.feature_stds

    def predict(self, X) -> np.ndarray:
        return self.standardize(X) @ self.weights

    def save(self, path: PathLike) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(dumps_model(self))

    @classmethod
    def load(cls, path: PathLike) -> "ElasticNetModel":
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
        try:
            return loads_model(text)
        except ValueError as exc:
            raise LoadError(path, str(exc)) from None


def dumps_model(model: ElasticNetModel) -> str:
    """Plain-text form: version, feature count, weights, means, stds, alpha, rho."""
    values = [*model.weights, *model.feature_means, *model.feature_stds, model.alpha, model.rho]
    lines = [str(MODEL_FORMAT_VERSION), str(model.n_features)]
    lines += [format(float(v), ".17g") for v in values]
    return "\n".join(lines) + "\n"


def loads_model(text: str) -> ElasticNetModel:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if len(lines) < 2:
        raise ValueError("truncated model file")
    if int(lines[0]) != MODEL_FORMAT_VERSION:
        raise ValueError(f"unsupported model format version {lines[0]}")
    k = int(lines[1])
    values = [float(v) for v in lines[2:]]
    if len(values) != 3 * k + 2:
        raise ValueError(f"expected {3 * k + 2} values for {k} features, got {len(values)}")
    stds = np.array(values[2 * k:3 * k])
    if np.any(stds <= 0):
        raise ValueError("feature standard deviations must be positive")
    return ElasticNetModel(np.array(values[:k]), values[3 * k], values[3 * k + 1],
                           np.array(values[k:2 * k]), stds)


def coordinate_descent(Z, y, alpha: float, rho: float, tol: float = 1e-6,
                       max_iter: int = 10000) -> Tuple[np.ndarray, int, List[float]]:
    """Minimize the elastic-net objective on an already standardized ``Z``.

    No sample-size or scaling checks; :func:`train_elastic_net` is the
    guarded entry point. Returns ``(weights, sweeps, objective_history)``.
    """
    Z = np.asarray(Z, dtype=float)
    y = np.asarray(y, dtype=float)
    n, k = Z.shape
    l1 = alpha * rho
    l2 = alpha * (1.0 - rho)
    col_sq = (Z * Z).sum(axis=0) / n
    w = np.zeros(k)
    resid = y.copy()
    history = [objective(Z, y, w, alpha, rho)]
    n_iter = 0
    for n_iter in range(1, max_iter + 1):
        max_step = 0.0
        for j in range(k):
            denom = col_sq[j] + l2
            old = w[j]
            if denom <= 0.0:
                new = 0.0
            else:
                rho_j = Z[:, j] @ resid / n + col_sq[j] * old
                new = soft_threshold(rho_j, l1) / denom
            if new != old:
                resid -= Z[:, j] * (new - old)
                w[j] = new
                max_step = max(max_step, abs(new - old))
        history.append(objective(Z, y, w, alpha, rho))
        if max_step < tol:
            break
    return w, n_iter, history


def train_elastic_net(X, y, alpha: float, rho: float, tol: float = 1e-6,
                      max_iter: int = 10000, standardize: bool = True) -> ElasticNetModel:
    """Fit elastic-net weights by cyclic coordinate descent.

    Parameters
    ----------
    X : array of shape (n_samples, n_features)
    y : array of shape (n_samples,)
    alpha : float
        Overall penalty strength, ``>= 0``.
    rho : float
        L1 share of the penalty, in ``[0, 1]``.
    tol : float
        Stop once no weight moves by more than this within a sweep.
    max_iter : int
        Maximum number of full sweeps.
    standardize : bool
        Center and scale columns with training statistics. Zero-variance
        columns keep a scale of 1. With ``False`` the raw ``X`` is used.

    Returns
    -------
    ElasticNetModel
        ``objective_history`` holds the objective at ``w = 0`` followed by
        its value after every sweep.
    """
    X = np.asarray(X, dtype=float)
    y = np.asarray(y, dtype=float)
    if X.ndim != 2 or y.shape != (X.shape[0],):
        raise TrainingError(f"shape mismatch: X {X.shape}, y {y.shape}")
    n, k = X.shape
    if n < MIN_TRAIN_SAMPLES:
        raise TrainingError(f"need at least {MIN_TRAIN_SAMPLES} samples, got {n}")
    if alpha < 0 or not 0.0 <= rho <= 1.0:
        raise TrainingError(f"invalid hyperparameters alpha={alpha}, rho={rho}")
    if standardize:
        means = X.mean(axis=0)
        stds = X.std(axis=0)
        stds[stds < 1e-12] = 1.0
    else:
        means, stds = np.zeros(k), np.ones(k)
    Z = (X - means) / stds

    w, n_iter, history = coordinate_descent(Z, y, alpha, rho, tol, max_iter)
    return ElasticNetModel(w, float(alpha), float(rho), means, stds, n_iter, history)


def _fold_ids(n_units: int, folds: int, seed: int) -> np.ndarray:
    perm = np.random.default_rng(seed).permutation(n_units)
    ids = np.empty(n_units, dtype=int)
    for f, chunk in enumerate(np.array_split(perm, folds)):
        ids[chunk] = f
    return ids


def fold_assignment(n_samples: int, folds: int, seed: int, groups=None) -> np.ndarray:
    """Deterministic fold index per sample; samples sharing a group stay together."""
    if groups is None:
        if n_samples < folds:
            raise TrainingError(f"{n_samples} samples cannot fill {folds} folds")
        return _fold_ids(n_samples, folds, seed)
    groups = np.asarray(groups)
    uniq, inverse = np.unique(groups, return_inverse=True)
    if len(uniq) < folds:
        raise TrainingError(f"{len(uniq)} groups cannot fill {folds} folds")
    return _fold_ids(len(uniq), folds, seed)[inverse]


def cross_validate(X, y, alpha_grid: Sequence[float], rho_grid: Sequence[float],
                   folds: int = 5, seed: int = 0, groups=None, tol: float = 1e-6,
                   max_iter: int = 10000) -> Tuple[float, float]:
    """Grid point with the lowest mean held-out squared error.

    Ties prefer the larger ``alpha`` and then the larger ``rho``.
    """
    if not alpha_grid or not rho_grid:
        raise TrainingError("hyperparameter grids must be non-empty")
    X = np.asarray(X, dtype=float)
    y = np.asarray(y, dtype=float)
    if len(alpha_grid) == 1 and len(rho_grid) == 1:
        return float(alpha_grid[0]), float(rho_grid[0])
    ids = fold_assignment(len(y), folds, seed, groups)
    best = None
    for alpha, rho in itertools.product(alpha_grid, rho_grid):
        errors = []
        for f in range(folds):
            test = ids == f
            model = train_elastic_net(X[~test], y[~test], alpha, rho, tol=tol, max_iter=max_iter)
            resid = model.predict(X[test]) - y[test]
            errors.append(float(resid @ resid) / test.sum())
        key = (float(np.mean(errors)), -alpha, -rho)
        if best is None or key < best:
            best = key
    return float(-best[1]), float(-best[2])


class ElasticNetRanker(RegressorMixin, BaseEstimator):
    """Scikit-learn wrapper around :func:`train_elastic_net`.

    Parameters
    ----------
    alpha : float, default=0.01
    rho : float, default=0.5
    tol : float, default=1e-6
    max_iter : int, default=10000
    standardize : bool, default=True

    Attributes
    ----------
    model_ : ElasticNetModel
    coef_ : ndarray of shape (n_features,)
    n_iter_ : int
    n_features_in_ : int
    """

    def __init__(self, alpha=0.01, rho=0.5, tol=1e-6, max_iter=10000, standardize=True):
        self.alpha = alpha
        self.rho = rho
        self.tol = tol
        self.max_iter = max_iter
        self.standardize = standardize

    def fit(self, X, y):
        X, y = check_X_y(X, y, dtype=float, y_numeric=True)
        self.model_ = train_elastic_net(X, y, self.alpha, self.rho, tol=self.tol,
                                        max_iter=self.max_iter, standardize=self.standardize)
        self.coef_ = self.model_.weights
        self.n_iter_ = self.model_.n_iter
        self.n_features_in_ = X.shape[1]
        return self

    def predict(self, X):
        check_is_fitted(self, "model_")
        X = check_array(X, dtype=float)
        if X.shape[1] != self.n_features_in_:
            raise ValueError(f"expected {self.n_features_in_} features, got {X.shape[1]}")
        return self.model_.predict(X)

    @classmethod
    def from_model(cls, model: ElasticNetModel) -> "ElasticNetRanker":
        est = cls(alpha=model.alpha, rho=model.rho)
        est.model_ = model
        est.coef_ = model.weights
        est.n_iter_ = model.n_iter
        est.n_features_in_ = model.n_features
        return est
