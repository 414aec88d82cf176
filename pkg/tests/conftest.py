"""Shared random constructors for the test suite."""

import numpy as np

from nced.algebra import norm


def rand_unit_element(rng, scale=1.0):
    """Random unit biquaternion, rejecting near-isotropic draws that would
    blow up under normalization."""
    while True:
        q = scale * (rng.normal(size=4) + 1j * rng.normal(size=4))
        n = norm(q)
        if abs(n) > 0.2 * scale * scale:
            return q / np.sqrt(n)


def rand_rotation(rng):
    """Random real unit quaternion (a spatial rotation)."""
    q = rng.normal(size=4)
    return (q / np.linalg.norm(q)).astype(np.complex128)


def rand_nonisotropic_k(rng, min_iso=0.1):
    """Random complex 3-vector bounded away from the isotropic cone."""
    while True:
        k = rng.normal(size=3) + 1j * rng.normal(size=3)
        if abs(k @ k) > min_iso * np.sum(np.abs(k) ** 2):
            return k


def rand_isotropic_k(rng, scale_range=(0.5, 2.0)):
    """Random complex 3-vector with exactly vanishing bilinear square, built
    from an orthogonal equal-length real pair."""
    p = rng.normal(size=3)
    p /= np.linalg.norm(p)
    q = rng.normal(size=3)
    q -= (q @ p) * p
    q /= np.linalg.norm(q)
    s = rng.uniform(*scale_range)
    return s * (p + 1j * q)
