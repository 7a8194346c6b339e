"""Cosine similarity between embedding vectors."""

from __future__ import annotations

import numpy as np


def cosine_similarity(a, b) -> float:
    """dot(a, b) / (|a| * |b|), in [-1, 1] up to rounding.

    Raises ValueError on dimension mismatch or a zero-norm operand.
    """
    va = np.asarray(a, dtype=np.float64)
    vb = np.asarray(b, dtype=np.float64)
    if va.shape != vb.shape or va.ndim != 1:
        raise ValueError(f"dimension mismatch: {va.shape} vs {vb.shape}")
    norm_a = float(np.linalg.norm(va))
    norm_b = float(np.linalg.norm(vb))
    if norm_a == 0.0 or norm_b == 0.0:
        raise ValueError("cosine similarity undefined for zero-norm vectors")
    return float(np.dot(va, vb) / (norm_a * norm_b))
