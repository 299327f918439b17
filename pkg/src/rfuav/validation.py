"""Input validation helpers used by the estimators and pipeline functions."""

import numpy as np

from .errors import DimensionError, NonFiniteError


def as_matrix(X, name="X", dtype=np.float64):
    """Coerce to a 2-D float array, rejecting anything else."""
    arr = np.asarray(X, dtype=dtype)
    if arr.ndim == 1:
        arr = arr.reshape(1, -1)
    if arr.ndim != 2:
        raise DimensionError(f"{name} must be 2-D, got shape {arr.shape}")
    return arr


def as_vector(x, name="x", dtype=np.float64):
    arr = np.asarray(x, dtype=dtype)
    if arr.ndim != 1:
        raise DimensionError(f"{name} must be 1-D, got shape {arr.shape}")
    return arr


def as_labels(y, name="y"):
    """Coerce labels to a 1-D int array (enum members collapse to their values)."""
    arr = np.asarray(y)
    if arr.ndim != 1:
        raise DimensionError(f"{name} must be 1-D, got shape {arr.shape}")
    return arr.astype(np.int64)


def check_finite(arr, name="array"):
    if not np.all(np.isfinite(arr)):
        raise NonFiniteError(f"{name} contains NaN or infinite values")
    return arr


def check_columns(arr, expected, name="X"):
    if arr.shape[-1] != expected:
        raise DimensionError(
            f"{name} has {arr.shape[-1]} columns, expected {expected}"
        )
    return arr


def check_same_rows(a, b, name_a="a", name_b="b"):
    if a.shape[0] != b.shape[0]:
        raise DimensionError(
            f"{name_a} has {a.shape[0]} rows but {name_b} has {b.shape[0]}"
        )
