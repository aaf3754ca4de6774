"""Seedable random draws with an explicit Box-Muller Gaussian transform."""

from __future__ import annotations

import math

import numpy as np


def generator(seed: int) -> np.random.Generator:
    """Documented seedable generator; stream `seed + e` is used for epoch e."""
    return np.random.Generator(np.random.PCG64(int(seed)))


def standard_normal(rng: np.random.Generator, shape) -> np.ndarray:
    """Standard normal draws via Box-Muller from uniform pairs."""
    n = int(np.prod(shape)) if shape else 1
    m = (n + 1) // 2
    u1 = rng.random(m)
    u2 = rng.random(m)
    # 1 - u1 lies in (0, 1], keeping the log argument strictly positive
    radius = np.sqrt(-2.0 * np.log1p(-u1))
    angle = 2.0 * math.pi * u2
    z = np.concatenate([radius * np.cos(angle), radius * np.sin(angle)])[:n]
    return z.reshape(shape)
