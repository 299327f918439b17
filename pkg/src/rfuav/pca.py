"""Principal-component reduction retaining a target fraction of variance.

Implemented through singular-value decomposition of the centered data
matrix rather than an explicit covariance matrix, which stays numerically
stable at a few thousand columns. The fitted object follows the sklearn
estimator protocol so it drops into pipelines next to the classifier.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin

from . import _io
from .errors import DegenerateDataError, DimensionError
from .validation import as_matrix, check_columns, check_finite

PCA_FORMAT_VERSION = 1


class VarianceTargetPCA(BaseEstimator, TransformerMixin):
    """PCA keeping the fewest components that explain ``variance_target``.

    Parameters
    ----------
    variance_target : float in (0, 1]
        Fraction of total variance the retained components must reach.
        The component that crosses the target is kept.
    standardize : bool
        Scale features to unit variance before the decomposition.
        Default is centering only.

    Attributes (after fit)
    ----------------------
    mean_ : (n_features,) per-feature mean of the training data.
    components_ : (n_components_, n_features) orthonormal rows.
    explained_variance_ : per-component variance, non-increasing.
    explained_variance_ratio_ : same, as a fraction of total variance.
    n_components_ : retained component count.
    """

    def __init__(self, variance_target: float = 0.95, standardize: bool = False):
        self.variance_target = variance_target
        self.standardize = standardize

    def fit(self, X, y=None):
        if not 0 < self.variance_target <= 1:
            raise ValueError(
                f"variance_target must lie in (0, 1], got {self.variance_target}"
            )
        X = check_finite(as_matrix(X, "X"), "X")
        n, d = X.shape
        if n < 2:
            raise DegenerateDataError("need at least 2 rows to fit")

        self.mean_ = X.mean(axis=0)
        centered = X - self.mean_
        if self.standardize:
            scale = centered.std(axis=0, ddof=1)
            scale[scale == 0] = 1.0
            self.scale_ = scale
            centered = centered / scale
        else:
            self.scale_ = None

        if np.all(X == X[0]):
            raise DegenerateDataError("all rows identical: total variance is zero")

        _, s, vt = np.linalg.svd(centered, full_matrices=False)
        variances = (s**2) / (n - 1)
        total = float(variances.sum())
        if total == 0.0:
            raise DegenerateDataError("total variance is zero")

        ratio = np.cumsum(variances) / total
        # keep the component that crosses the target; tiny slack so that a
        # target of exactly 1.0 is met by the full numerical rank
        k = int(np.searchsorted(ratio, self.variance_target - 1e-12) + 1)
        k = min(k, variances.size)

        self.components_ = vt[:k]
        self.explained_variance_ = variances[:k]
        self.explained_variance_ratio_ = variances[:k] / total
        self.total_variance_ = total
        self.n_components_ = k
        self.n_features_in_ = d
        return self

    def transform(self, X):
        self._check_fitted()
        X = as_matrix(X, "X")
        check_columns(X, self.n_features_in_, "X")
        centered = X - self.mean_
        if self.scale_ is not None:
            centered = centered / self.scale_
        return centered @ self.components_.T

    def inverse_transform(self, Z):
        self._check_fitted()
        Z = as_matrix(Z, "Z")
        check_columns(Z, self.n_components_, "Z")
        X = Z @ self.components_
        if self.scale_ is not None:
            X = X * self.scale_
        return X + self.mean_

    def retained_variance_fraction(self) -> float:
        self._check_fitted()
        return float(self.explained_variance_.sum() / self.total_variance_)

    def _check_fitted(self):
        if not hasattr(self, "components_"):
            raise DimensionError("transformer is not fitted")

    # --- persistence ---

    def save(self, path) -> None:
        self._check_fitted()
        _io.save_npz_atomic(
            path,
            format_version=np.int64(PCA_FORMAT_VERSION),
            kind=np.str_("pca"),
            variance_target=np.float64(self.variance_target),
            standardize=np.bool_(self.standardize),
            mean=self.mean_,
            scale=self.scale_ if self.scale_ is not None else np.zeros(0),
            components=self.components_,
            explained_variance=self.explained_variance_,
            total_variance=np.float64(self.total_variance_),
        )

    @classmethod
    def load(cls, path) -> "VarianceTargetPCA":
        data = np.load(path, allow_pickle=False)
        version = int(data["format_version"])
        if version != PCA_FORMAT_VERSION:
            raise DimensionError(
                f"unsupported PCA bundle version {version}, expected {PCA_FORMAT_VERSION}"
            )
        model = cls(
            variance_target=float(data["variance_target"]),
            standardize=bool(data["standardize"]),
        )
        model.mean_ = data["mean"]
        scale = data["scale"]
        model.scale_ = scale if scale.size else None
        model.components_ = data["components"]
        model.explained_variance_ = data["explained_variance"]
        model.total_variance_ = float(data["total_variance"])
        model.explained_variance_ratio_ = (
            model.explained_variance_ / model.total_variance_
        )
        model.n_components_ = model.components_.shape[0]
        model.n_features_in_ = model.components_.shape[1]
        if model.mean_.shape[0] != model.n_features_in_:
            raise DimensionError("PCA bundle is internally inconsistent")
        return model
