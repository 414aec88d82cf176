"""Dual rotations of the self/anti-self-dual field combinations.

With ``G = f + h`` and ``R = f - h`` the constitutive system is the pair of
orientations

    D2 = h - f + (f.K)* f + 1/2 (f.f)* K      (forward relation)
    D1 = f - h - (h.K)* h - 1/2 (h.h)* K      (its first-order inverse)

(conjugated bilinear dots).  A state is consistent when either orientation
vanishes exactly; the residual reported here is the defect of the
best-matching orientation.  Under the dual rotation ``G -> e^{i chi} G``,
``R -> e^{-i chi} R``, ``K -> e^{i chi} K`` a quarter turn swaps the two
orientations (up to a phase), a half turn preserves each, and any other
angle breaks both: the surviving dual symmetry is exactly the four phases
``e^{i chi} in {1, -1, i, -i}``.  With K = 0 (and h = f) both orientations
vanish for every chi.
"""

from typing import NamedTuple

import numpy as np

from ._backend import jit
from .errors import InconsistentInputError
from .tolerances import DEFAULT as TOL


class GRState(NamedTuple):
    G: np.ndarray
    R: np.ndarray


def gr_from_fh(f, h):
    f = np.asarray(f, np.complex128)
    h = np.asarray(h, np.complex128)
    return GRState(f + h, f - h)


def fh_from_gr(s):
    return 0.5 * (s.G + s.R), 0.5 * (s.G - s.R)


def dual_rotate(s, k, chi):
    """Phase-rotate (G, R, K) by a real duality angle chi."""
    ph = np.exp(1j * float(chi))
    return GRState(ph * s.G, s.R / ph), ph * np.asarray(k, np.complex128)


@jit
def _gr_residual(G, R, K):
    d1 = 0.0
    d2 = 0.0
    f0, f1, f2 = 0.5 * (G[0] + R[0]), 0.5 * (G[1] + R[1]), 0.5 * (G[2] + R[2])
    h0, h1, h2 = 0.5 * (G[0] - R[0]), 0.5 * (G[1] - R[1]), 0.5 * (G[2] - R[2])
    s_fk = (f0 * K[0] + f1 * K[1] + f2 * K[2]).conjugate()
    s_ff = (f0 * f0 + f1 * f1 + f2 * f2).conjugate()
    s_hk = (h0 * K[0] + h1 * K[1] + h2 * K[2]).conjugate()
    s_hh = (h0 * h0 + h1 * h1 + h2 * h2).conjugate()
    fs = (f0, f1, f2)
    hs = (h0, h1, h2)
    for j in range(3):
        fwd = hs[j] - fs[j] + s_fk * fs[j] + 0.5 * s_ff * K[j]
        inv = fs[j] - hs[j] - s_hk * hs[j] - 0.5 * s_hh * K[j]
        m = abs(fwd)
        if m > d2:
            d2 = m
        m = abs(inv)
        if m > d1:
            d1 = m
    return d1 if d1 < d2 else d2


@jit
def _scan_kernel(G, R, K, chis):
    out = np.empty(chis.shape[0], np.float64)
    for i in range(chis.shape[0]):
        ph = np.exp(1j * chis[i])
        out[i] = _gr_residual(ph * G, R / ph, ph * K)
    return out


def constitutive_residual_gr(s, k):
    """Max-component defect of the constitutive pair in (G, R, K) variables,
    measured against its best-matching orientation."""
    k = np.asarray(k, np.complex128)
    return float(_gr_residual(np.ascontiguousarray(s.G), np.ascontiguousarray(s.R), k))


def duality_scan(s, k, n):
    """Residual after dual rotation on the uniform angle grid 2 pi j / n.

    The input state must satisfy the constitutive pair before rotation;
    otherwise InconsistentInputError is raised.
    """
    if n < 8:
        raise ValueError("scan resolution n must be at least 8")
    k = np.asarray(k, np.complex128)
    pre = constitutive_residual_gr(s, k)
    scale = max(1.0, float(np.max(np.abs(s.G))), float(np.max(np.abs(s.R)))) ** 2
    if pre > TOL.duality_consistency * scale:
        raise InconsistentInputError(
            f"state violates the constitutive pair before rotation (residual {pre:.3e})"
        )
    chis = 2.0 * np.pi * np.arange(n) / n
    res = _scan_kernel(np.ascontiguousarray(s.G), np.ascontiguousarray(s.R), k, chis)
    return list(zip(chis.tolist(), res.tolist()))
