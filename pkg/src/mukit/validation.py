"""Input validation helpers shared across the toolkit.

These play the role sklearn's ``check_array`` plays for its estimators:
every public entry point funnels its inputs through one of these checks so
shape and range errors surface with a clear message instead of deep inside
a numpy kernel.
"""

import numpy as np

TARGET_SAMPLE_RATE = 16000
CLIP_SECONDS = 30.0
MEL_FRAMES = 3072
MEL_BINS = 128
SEGMENT_FRAMES = 1024
N_SEGMENTS = 3
PATCH_SIZE = 16
RAW_TOKEN_DIM = PATCH_SIZE * PATCH_SIZE
N_RAW_TOKENS = 1536


class ValidationError(ValueError):
    """Raised when an input violates a documented precondition."""


def as_sample_array(samples, name="samples"):
    """Coerce to a 1-D float32 array and reject empty or non-finite input."""
    arr = np.asarray(samples, dtype=np.float32)
    if arr.ndim != 1:
        raise ValidationError(f"{name} must be 1-D mono audio, got shape {arr.shape}")
    if arr.size == 0:
        raise ValidationError(f"{name} is empty")
    if not np.all(np.isfinite(arr)):
        raise ValidationError(f"{name} contains non-finite values")
    return arr


def check_sample_rate(sample_rate):
    if not isinstance(sample_rate, (int, np.integer)) or sample_rate <= 0:
        raise ValidationError(f"sample_rate must be a positive integer, got {sample_rate!r}")
    return int(sample_rate)


def check_standardized(clip):
    """Require a clip in the canonical form: 16 kHz, exactly 30 s."""
    expected = int(round(CLIP_SECONDS * TARGET_SAMPLE_RATE))
    if clip.sample_rate != TARGET_SAMPLE_RATE:
        raise ValidationError(
            f"clip must be standardized to {TARGET_SAMPLE_RATE} Hz, got {clip.sample_rate}"
        )
    if clip.samples.size != expected:
        raise ValidationError(
            f"clip must hold exactly {expected} samples ({CLIP_SECONDS:g} s), "
            f"got {clip.samples.size}"
        )
    return clip


def check_mel_values(values):
    """Require a full (3072, 128) log-mel matrix with finite entries."""
    arr = np.asarray(values, dtype=np.float32)
    if arr.shape != (MEL_FRAMES, MEL_BINS):
        raise ValidationError(
            f"mel spectrogram must have shape ({MEL_FRAMES}, {MEL_BINS}), got {arr.shape}"
        )
    if not np.all(np.isfinite(arr)):
        raise ValidationError("mel spectrogram contains non-finite values")
    return arr


def check_token_matrix(tokens):
    arr = np.asarray(tokens, dtype=np.float32)
    if arr.ndim != 2 or arr.shape[0] == 0:
        raise ValidationError(f"tokens must be a non-empty (n, dim) matrix, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValidationError("tokens contain non-finite values")
    return arr
