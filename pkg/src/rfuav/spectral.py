"""Frequency-domain feature extraction.

Each receiver half is transformed to a power spectrum (magnitude of the
discrete Fourier transform, positive frequencies only) and the two halves
are stitched into one continuous spectrum. The receivers are distinct
devices, so the upper half is rescaled by a boundary ratio ``c`` before
concatenation: the sum of the last ``Q`` lower bins over the sum of the
first ``Q`` upper bins. All spectral math runs in float64.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DegenerateInputError,
    DimensionError,
    HalfMismatchError,
    ZeroDenominatorError,
)
from .ingest import LabeledSpectrumSet, ReceiverHalf, RFSegment

DEFAULT_FFT_BINS = 2048
DEFAULT_Q_WINDOW = 10


@dataclass(frozen=True)
class HalfSpectrum:
    """Positive-frequency magnitude spectrum of one receiver half."""

    magnitudes: np.ndarray
    half: ReceiverHalf

    def __post_init__(self):
        mags = np.asarray(self.magnitudes, dtype=np.float64)
        if mags.ndim != 1 or mags.size < 1:
            raise DimensionError(f"magnitudes must be a non-empty vector, got {mags.shape}")
        if not np.all(np.isfinite(mags)) or np.any(mags < 0):
            raise DegenerateInputError("magnitudes must be finite and non-negative")
        mags.setflags(write=False)
        object.__setattr__(self, "magnitudes", mags)

    @property
    def n_bins(self) -> int:
        return self.magnitudes.size


@dataclass(frozen=True)
class StitchedSpectrum:
    """Both halves joined into one spectrum of ``m_total`` bins."""

    bins: np.ndarray
    m_total: int
    c_factor: float
    q_window: int

    def __post_init__(self):
        bins = np.asarray(self.bins, dtype=np.float64)
        if bins.size != self.m_total:
            raise DimensionError(
                f"{bins.size} bins but m_total declared as {self.m_total}"
            )
        if not (np.isfinite(self.c_factor) and self.c_factor > 0):
            raise ZeroDenominatorError(
                f"normalization factor must be finite and positive, got {self.c_factor}"
            )
        if not 0 < self.q_window < self.m_total / 2:
            raise DimensionError(
                f"q_window {self.q_window} outside (0, {self.m_total / 2})"
            )
        bins.setflags(write=False)
        object.__setattr__(self, "bins", bins)


def power_spectrum(segment: RFSegment, m_bins: int) -> HalfSpectrum:
    """Positive-frequency power spectrum with ``m_bins`` frequency divisions.

    The transform block length is ``m_bins`` and the first ``m_bins // 2``
    bins (DC up to, excluding, Nyquist) are returned. Signals shorter than
    the block are zero-padded; longer signals are split into consecutive
    full blocks whose magnitudes are averaged, which lowers the variance of
    the noise floor without moving tone peaks.
    """
    if m_bins < 2 or m_bins % 2 != 0:
        raise DimensionError(f"m_bins must be an even integer >= 2, got {m_bins}")
    x = segment.samples
    n = x.size
    if n < 2:
        raise DegenerateInputError(f"segment has {n} samples, need at least 2")

    if n < m_bins:
        blocks = np.zeros((1, m_bins))
        blocks[0, :n] = x
    else:
        n_blocks = n // m_bins
        blocks = x[: n_blocks * m_bins].reshape(n_blocks, m_bins)

    mags = np.abs(np.fft.fft(blocks, axis=1)).mean(axis=0)
    return HalfSpectrum(mags[: m_bins // 2], segment.receiver_half)


def stitch(lower: HalfSpectrum, upper: HalfSpectrum, q_window: int = DEFAULT_Q_WINDOW) -> StitchedSpectrum:
    """Join two half spectra, rescaling the upper by the boundary ratio ``c``."""
    if lower.half is not ReceiverHalf.LOWER or upper.half is not ReceiverHalf.UPPER:
        raise HalfMismatchError(
            f"expected (LOWER, UPPER), got ({lower.half.name}, {upper.half.name})"
        )
    if q_window < 1 or q_window > min(lower.n_bins, upper.n_bins):
        raise DimensionError(
            f"q_window {q_window} must lie in [1, {min(lower.n_bins, upper.n_bins)}]"
        )

    denom = float(np.sum(upper.magnitudes[:q_window]))
    if denom == 0.0:
        raise ZeroDenominatorError(
            f"first {q_window} upper bins sum to zero; cannot normalize"
        )
    numer = float(np.sum(lower.magnitudes[-q_window:]))
    if numer == 0.0:
        raise ValueError(
            f"last {q_window} lower bins sum to zero; boundary ratio would vanish"
        )
    c = numer / denom
    bins = np.concatenate([lower.magnitudes, c * upper.magnitudes])
    return StitchedSpectrum(bins, lower.n_bins + upper.n_bins, c, q_window)


def featurize(spec: StitchedSpectrum) -> np.ndarray:
    """Classifier features: every stitched bin except DC (index 0)."""
    return np.asarray(spec.bins[1:], dtype=np.float64)


def spectrum_from_pair(
    lower_seg: RFSegment,
    upper_seg: RFSegment,
    m_bins: int = DEFAULT_FFT_BINS,
    q_window: int = DEFAULT_Q_WINDOW,
) -> StitchedSpectrum:
    lower = power_spectrum(lower_seg, m_bins)
    upper = power_spectrum(upper_seg, m_bins)
    return stitch(lower, upper, q_window)


def build_corpus(
    triples,
    m_bins: int = DEFAULT_FFT_BINS,
    q_window: int = DEFAULT_Q_WINDOW,
) -> LabeledSpectrumSet:
    """Run the spectral pipeline over labeled segment pairs.

    Feature vectors are stored in float32; the spectral math itself stays
    in float64 up to that final cast.
    """
    rows = []
    labels = []
    n_samples = None
    for low, up, label in triples:
        rows.append(featurize(spectrum_from_pair(low, up, m_bins, q_window)))
        labels.append(int(label))
        n_samples = low.n_samples
    feature_count = m_bins - 1
    spectra = (
        np.vstack(rows).astype(np.float32)
        if rows
        else np.empty((0, feature_count), dtype=np.float32)
    )
    meta = {
        "m_bins": m_bins,
        "q_window": q_window,
        "segment_samples": n_samples,
    }
    return LabeledSpectrumSet(spectra, np.array(labels), feature_count, metadata=meta)
