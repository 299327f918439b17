"""Corpus ingestion: segmented RF recordings, labels, and synthetic test data.

Recordings arrive as flat CSV files, one file per (segment, receiver half):
a single comma-separated row of time-domain amplitudes with no header.
Filenames follow ``<class>_<segment>_<L|H>.csv``; a manifest CSV mapping
``segment_id,class_code`` is authoritative for labels and overrides whatever
the filename claims.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum, IntEnum
from pathlib import Path

import numpy as np

from .errors import (
    DegenerateInputError,
    DimensionError,
    LabelError,
    MalformedCsvError,
    MissingPairError,
    ProfileError,
)

_FILENAME_RE = re.compile(r"^(\d+)_(\d+)_([LH])\.csv$")

CORPUS_SCHEMA_VERSION = 1


class ReceiverHalf(Enum):
    """Which half of the monitored band a receiver captured."""

    LOWER = "L"
    UPPER = "H"


class ClassLabel(IntEnum):
    """The four UAV classes, in confusion-matrix axis order."""

    NO_DRONE = 0
    BEBOP = 1
    AR = 2
    PHANTOM = 3


@dataclass(frozen=True)
class RFSegment:
    """One receiver half's time-domain samples for a single segment."""

    samples: np.ndarray
    receiver_half: ReceiverHalf
    segment_id: int

    def __post_init__(self):
        samples = np.asarray(self.samples, dtype=np.float64)
        if samples.ndim != 1 or samples.size < 2:
            raise DegenerateInputError(
                f"segment {self.segment_id}: need at least 2 samples, "
                f"got shape {samples.shape}"
            )
        if not np.all(np.isfinite(samples)):
            raise DegenerateInputError(
                f"segment {self.segment_id}: samples contain NaN or infinity"
            )
        samples.setflags(write=False)
        object.__setattr__(self, "samples", samples)

    @property
    def n_samples(self) -> int:
        return self.samples.size


@dataclass
class LabeledSpectrumSet:
    """Feature matrix (one stitched spectrum per row) with class labels."""

    spectra: np.ndarray  # float32, shape (n_instances, feature_count)
    labels: np.ndarray  # int64, shape (n_instances,)
    feature_count: int
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        self.spectra = np.asarray(self.spectra, dtype=np.float32)
        self.labels = np.asarray(self.labels, dtype=np.int64)
        if self.spectra.ndim != 2:
            raise DimensionError(f"spectra must be 2-D, got {self.spectra.shape}")
        if self.spectra.shape[0] != self.labels.shape[0]:
            raise DimensionError(
                f"{self.spectra.shape[0]} spectra but {self.labels.shape[0]} labels"
            )
        if self.spectra.shape[1] != self.feature_count:
            raise DimensionError(
                f"rows have {self.spectra.shape[1]} features, "
                f"declared feature_count is {self.feature_count}"
            )

    def __len__(self) -> int:
        return self.spectra.shape[0]


def _parse_csv_row(path: Path) -> np.ndarray:
    """Parse a headerless CSV of decimal amplitudes, locating any bad token."""
    values = []
    with open(path, "r", encoding="utf-8") as fh:
        for row_idx, line in enumerate(fh):
            line = line.strip()
            if not line:
                continue
            tokens = line.split(",")
            try:
                values.append(np.array(tokens, dtype=np.float64))
            except ValueError:
                for col_idx, tok in enumerate(tokens):
                    try:
                        float(tok)
                    except ValueError:
                        raise MalformedCsvError(path, row_idx, col_idx, tok) from None
                raise  # unreachable: the vectorized cast failed on some token
    if not values:
        raise DegenerateInputError(f"{path}: no samples found")
    return np.concatenate(values)


def _scan_half_dir(directory: Path, half: ReceiverHalf) -> dict[int, Path]:
    found: dict[int, Path] = {}
    for path in sorted(directory.iterdir()):
        m = _FILENAME_RE.match(path.name)
        if m is None or m.group(3) != half.value:
            continue
        found[int(m.group(2))] = path
    return found


def read_manifest(path) -> dict[int, int]:
    """Read a ``segment_id,class_code`` manifest; a header row is optional."""
    mapping: dict[int, int] = {}
    with open(path, "r", encoding="utf-8") as fh:
        for row_idx, line in enumerate(fh):
            line = line.strip()
            if not line:
                continue
            parts = [p.strip() for p in line.split(",")]
            if row_idx == 0 and not parts[0].lstrip("-").isdigit():
                continue  # header
            if len(parts) != 2:
                raise MalformedCsvError(path, row_idx, 0, line)
            try:
                mapping[int(parts[0])] = int(parts[1])
            except ValueError:
                raise MalformedCsvError(path, row_idx, 1, parts[1]) from None
    return mapping


def load_dronerf_pairs(
    lower_dir, upper_dir, manifest
) -> list[tuple[RFSegment, RFSegment, ClassLabel]]:
    """Load paired lower/upper recordings and label them from the manifest.

    Every segment id must appear in both directories with equal sample
    counts. Unpaired files are an error, never silently dropped.
    """
    lower_dir, upper_dir = Path(lower_dir), Path(upper_dir)
    labels = read_manifest(manifest)
    lower_files = _scan_half_dir(lower_dir, ReceiverHalf.LOWER)
    upper_files = _scan_half_dir(upper_dir, ReceiverHalf.UPPER)

    only_lower = sorted(set(lower_files) - set(upper_files))
    only_upper = sorted(set(upper_files) - set(lower_files))
    if only_lower or only_upper:
        raise MissingPairError(
            f"unpaired segments: missing upper half for {only_lower}, "
            f"missing lower half for {only_upper}"
        )

    triples = []
    for seg_id in sorted(lower_files):
        if seg_id not in labels:
            raise LabelError(f"segment {seg_id} has no manifest entry")
        low = RFSegment(_parse_csv_row(lower_files[seg_id]), ReceiverHalf.LOWER, seg_id)
        up = RFSegment(_parse_csv_row(upper_files[seg_id]), ReceiverHalf.UPPER, seg_id)
        if low.n_samples != up.n_samples:
            raise MissingPairError(
                f"segment {seg_id}: halves have {low.n_samples} and "
                f"{up.n_samples} samples; refusing to truncate"
            )
        triples.append((low, up, ClassLabel(labels[seg_id])))
    return triples


@dataclass(frozen=True)
class SynthProfile:
    """Recipe for one synthetic class: sinusoid banks per half plus noise.

    Tone frequencies are in cycles per sample; a tone at ``k / m_bins``
    lands exactly on spectrum bin ``k`` when segments are transformed with
    ``m_bins`` frequency divisions.
    """

    label: ClassLabel
    lower_tones: tuple[tuple[float, float], ...]  # (freq, amplitude)
    upper_tones: tuple[tuple[float, float], ...]
    noise_std: float = 0.05

    def __post_init__(self):
        if not self.lower_tones and not self.upper_tones and self.noise_std == 0:
            raise ProfileError(
                f"profile for {self.label.name}: no tones and zero noise "
                "would generate an all-zero signal"
            )


def _tone_bank(n: int, tones, rng, noise_std: float) -> np.ndarray:
    t = np.arange(n, dtype=np.float64)
    signal = np.zeros(n)
    for freq, amp in tones:
        signal += amp * np.cos(2.0 * np.pi * freq * t)
    if noise_std > 0:
        signal += rng.normal(0.0, noise_std, size=n)
    return signal


def synth_generate(
    class_profiles: list[SynthProfile],
    segments_per_class: int,
    seed: int,
    n_samples: int = 2048,
) -> list[tuple[RFSegment, RFSegment, ClassLabel]]:
    """Generate a deterministic labeled corpus of paired synthetic segments."""
    if segments_per_class < 1:
        raise ProfileError("segments_per_class must be >= 1")
    rng = np.random.default_rng(seed)
    triples = []
    seg_id = 0
    for profile in class_profiles:
        for _ in range(segments_per_class):
            low = _tone_bank(n_samples, profile.lower_tones, rng, profile.noise_std)
            up = _tone_bank(n_samples, profile.upper_tones, rng, profile.noise_std)
            triples.append(
                (
                    RFSegment(low, ReceiverHalf.LOWER, seg_id),
                    RFSegment(up, ReceiverHalf.UPPER, seg_id),
                    profile.label,
                )
            )
            seg_id += 1
    return triples


def default_demo_profiles(m_bins: int = 2048) -> list[SynthProfile]:
    """Four separable profiles: background noise plus three tone banks."""
    def bins(*ks, amp=1.0):
        return tuple((k / m_bins, amp) for k in ks)

    return [
        SynthProfile(ClassLabel.NO_DRONE, (), (), noise_std=0.05),
        SynthProfile(ClassLabel.BEBOP, bins(60, 220), bins(40, 300), noise_std=0.05),
        SynthProfile(ClassLabel.AR, bins(130, 400), bins(90), noise_std=0.05),
        SynthProfile(ClassLabel.PHANTOM, bins(310), bins(150, 480), noise_std=0.05),
    ]


def write_raw_corpus(triples, out_dir) -> None:
    """Write triples to ``lower/``, ``upper/`` and ``manifest.csv``.

    Output is byte-deterministic: amplitudes use repr-exact float formatting.
    """
    out_dir = Path(out_dir)
    lower_dir = out_dir / "lower"
    upper_dir = out_dir / "upper"
    lower_dir.mkdir(parents=True, exist_ok=True)
    upper_dir.mkdir(parents=True, exist_ok=True)

    manifest_lines = ["segment_id,class_code"]
    for low, up, label in triples:
        for seg, directory in ((low, lower_dir), (up, upper_dir)):
            name = f"{int(label)}_{seg.segment_id:05d}_{seg.receiver_half.value}.csv"
            row = ",".join(repr(v) for v in seg.samples.tolist())
            (directory / name).write_text(row + "\n", encoding="utf-8")
        manifest_lines.append(f"{low.segment_id},{int(label)}")
    (out_dir / "manifest.csv").write_text(
        "\n".join(manifest_lines) + "\n", encoding="utf-8"
    )


def save_feature_corpus(corpus: LabeledSpectrumSet, path) -> None:
    """Write the canonical feature CSV: header ``label,f0,...``, one row per instance.

    Values are printed with enough digits to round-trip float32 bit-exactly.
    """
    path = Path(path)
    d = corpus.feature_count
    header = "label," + ",".join(f"f{i}" for i in range(d))
    lines = [header]
    for label, row in zip(corpus.labels, corpus.spectra):
        lines.append(str(int(label)) + "," + ",".join("%.9e" % v for v in row))
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def load_feature_corpus(path) -> LabeledSpectrumSet:
    """Read a canonical feature CSV written by :func:`save_feature_corpus`."""
    path = Path(path)
    labels = []
    rows = []
    with open(path, "r", encoding="utf-8") as fh:
        header = fh.readline().strip()
        if not header.startswith("label,"):
            raise MalformedCsvError(path, 0, 0, header[:32])
        feature_count = len(header.split(",")) - 1
        for row_idx, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            tokens = line.split(",")
            if len(tokens) != feature_count + 1:
                raise MalformedCsvError(path, row_idx, len(tokens) - 1, line[-32:])
            try:
                labels.append(int(tokens[0]))
                rows.append(np.array(tokens[1:], dtype=np.float32))
            except ValueError:
                for col_idx, tok in enumerate(tokens):
                    try:
                        float(tok)
                    except ValueError:
                        raise MalformedCsvError(path, row_idx, col_idx, tok) from None
                raise
    spectra = (
        np.vstack(rows) if rows else np.empty((0, feature_count), dtype=np.float32)
    )
    return LabeledSpectrumSet(spectra, np.array(labels, dtype=np.int64), feature_count)
