"""Unit biquaternions as (double-cover) proper Lorentz transformations.

Elements are length-4 complex arrays with ``norm(L) = 1``.  Real elements are
spatial rotations; elements with real scalar and imaginary vector part are
boosts.  The native group parameter is a half-angle: ``rotation(n, chi)``
rotates by ``2*chi`` and ``boost(n, beta)`` has rapidity ``2*beta``.

Convention notes (fixed here once, used consistently everywhere):

* complex 3-vectors transform through ``act_vector``, the sandwich by the
  componentwise conjugate of ``L``.  This makes ``L -> action`` a group
  homomorphism and puts the stabilizer axis of a noncommutativity vector at
  ``theta + i*epsilon``.
* four-vectors are encoded as ``A = -i a0 + a_vec`` and transported by the
  matching law below; real four-vectors stay real and the induced 4x4 matrix
  is proper orthochronous.
* the orientation of positive angles is whatever the matrix entries of
  ``so3c_entries`` produce; no independent handedness convention is imposed.
"""

import numpy as np

from . import algebra as alg
from ._backend import jit
from .errors import DegenerateError, NotUnitError
from .tolerances import DEFAULT as TOL

ETA = np.diag([1.0, -1.0, -1.0, -1.0])


def identity():
    return alg.quat(1.0)


def abs2(q):
    """Sum of squared component magnitudes (Hermitian size, a float)."""
    return float(np.sum(np.abs(q) ** 2))


def make_element(k0, k):
    """Validate (k0, k) as a unit biquaternion.

    Defects up to 1e-9 are repaired by dividing by the principal square root
    of the bilinear norm; anything larger raises NotUnitError.
    """
    L = alg.quat(k0, np.asarray(k, np.complex128))
    defect = abs(alg.norm(L) - 1.0)
    if defect > TOL.unit_reject:
        raise NotUnitError(f"norm defect {defect:.3e} exceeds {TOL.unit_reject:.1e}")
    if defect > TOL.unit_clean:
        L = L / np.sqrt(alg.norm(L))
    return L


def rotation(axis, chi):
    """Spatial rotation about a real unit axis by angle 2*chi."""
    n = np.asarray(axis, float)
    n = n / np.linalg.norm(n)
    return alg.quat(np.cos(chi), np.sin(chi) * n)


def boost(axis, beta):
    """Boost along a real unit axis with rapidity 2*beta."""
    n = np.asarray(axis, float)
    n = n / np.linalg.norm(n)
    return alg.quat(np.cosh(beta), 1j * np.sinh(beta) * n)


def compose(L1, L2):
    """Group product; renormalized when floating error accumulates."""
    L = alg.mul(L1, L2)
    return make_element(L[0], L[1:])


def inverse(L):
    return alg.conj_quat(L)


def act_vector(L, v):
    """Transform a complex 3-vector; the SO(3,C) action of the element.

    The scalar part of the sandwich must cancel; a leak signals a corrupted
    element and raises DegenerateError.
    """
    v = np.asarray(v, np.complex128)
    n = alg.conj_components(L)
    r = alg.mul(alg.mul(n, alg.from_vector(v)), alg.conj_quat(n))
    scale = max(1.0, abs2(n) * float(np.max(np.abs(v), initial=0.0)))
    if abs(r[0]) > TOL.scalar_leak * scale:
        raise DegenerateError(f"scalar leak {abs(r[0]):.3e} in vector transform")
    return r[1:4]


@jit
def so3c_entries(q):
    """Complex orthogonal 3x3 matrix of the two-to-one map from a unit
    biquaternion q = (k0, k1, k2, k3); it fixes q's own vector part."""
    k0, k1, k2, k3 = q[0], q[1], q[2], q[3]
    o = np.empty((3, 3), np.complex128)
    o[0, 0] = 1.0 - 2.0 * (k2 * k2 + k3 * k3)
    o[0, 1] = -2.0 * k0 * k3 + 2.0 * k1 * k2
    o[0, 2] = 2.0 * k0 * k2 + 2.0 * k1 * k3
    o[1, 0] = 2.0 * k0 * k3 + 2.0 * k1 * k2
    o[1, 1] = 1.0 - 2.0 * (k3 * k3 + k1 * k1)
    o[1, 2] = -2.0 * k0 * k1 + 2.0 * k2 * k3
    o[2, 0] = -2.0 * k0 * k2 + 2.0 * k1 * k3
    o[2, 1] = 2.0 * k0 * k1 + 2.0 * k2 * k3
    o[2, 2] = 1.0 - 2.0 * (k1 * k1 + k2 * k2)
    return o


def so3c_matrix(L):
    """Matrix of ``act_vector(L, .)``: the entry map evaluated on the
    componentwise conjugate of L."""
    return so3c_entries(alg.conj_components(L))


def _encode_four(a0, a):
    q = alg.quat(-1j * a0, np.asarray(a, np.complex128))
    return q


def act_four_vector(L, a0, a):
    """Transform a real four-vector (a0, a); returns real (a0', a')."""
    A = _encode_four(a0, a)
    r = alg.mul(alg.mul(alg.conj_components(L), A), alg.conj_quat(L))
    b0 = 1j * r[0]
    b = r[1:4]
    scale = max(1.0, abs2(alg.conj_components(L)) * max(abs(a0), float(np.max(np.abs(np.asarray(a, np.complex128))))))
    if abs(b0.imag) > TOL.reality * scale or np.max(np.abs(b.imag)) > TOL.reality * scale:
        raise DegenerateError("four-vector transform produced a complex result")
    return float(b0.real), b.real.copy()


def lorentz_matrix4(L):
    """4x4 matrix of the four-vector action, columns = transformed basis."""
    m = np.empty((4, 4))
    for mu in range(4):
        a0 = 1.0 if mu == 0 else 0.0
        a = np.zeros(3)
        if mu > 0:
            a[mu - 1] = 1.0
        b0, b = act_four_vector(L, a0, a)
        m[0, mu] = b0
        m[1:, mu] = b
    return m


def factorize(L):
    """Polar split L = rotation * boost.

    The boost squared is conj_complex(L) * L (always unit with real scalar
    >= 1); its principal square root is the boost, and the remaining factor
    is a real rotation.
    """
    q = alg.mul(alg.conj_complex(L), L)
    b = q + alg.ONE
    nb = alg.norm(b)
    if abs(nb) < 1e-12:
        raise DegenerateError("polar factorization degenerate; element not unit?")
    bst = b / np.sqrt(nb)
    rot = alg.mul(L, alg.conj_quat(bst))
    scale = max(1.0, abs2(L))
    if np.max(np.abs(rot.imag)) > 1e-10 * scale:
        raise DegenerateError("rotation factor came out complex")
    if abs(bst[0].imag) > 1e-10 * scale or np.max(np.abs(bst[1:].real)) > 1e-10 * scale:
        raise DegenerateError("boost factor lost its structure")
    rot = rot.real.astype(np.complex128)
    bst_clean = alg.quat(bst[0].real, 1j * bst[1:].imag)
    return rot, bst_clean


def element_from_rotation_matrix(r):
    """Real unit biquaternion whose action matrix equals the given real
    orthogonal matrix (Shepperd's method)."""
    r = np.asarray(r, float)
    t = np.trace(r)
    if t > 0:
        w = 0.5 * np.sqrt(1.0 + t)
        x = (r[2, 1] - r[1, 2]) / (4.0 * w)
        y = (r[0, 2] - r[2, 0]) / (4.0 * w)
        z = (r[1, 0] - r[0, 1]) / (4.0 * w)
    else:
        i = int(np.argmax(np.diag(r)))
        if i == 0:
            s = 2.0 * np.sqrt(1.0 + r[0, 0] - r[1, 1] - r[2, 2])
            w = (r[2, 1] - r[1, 2]) / s
            x = 0.25 * s
            y = (r[0, 1] + r[1, 0]) / s
            z = (r[0, 2] + r[2, 0]) / s
        elif i == 1:
            s = 2.0 * np.sqrt(1.0 - r[0, 0] + r[1, 1] - r[2, 2])
            w = (r[0, 2] - r[2, 0]) / s
            x = (r[0, 1] + r[1, 0]) / s
            y = 0.25 * s
            z = (r[1, 2] + r[2, 1]) / s
        else:
            s = 2.0 * np.sqrt(1.0 - r[0, 0] - r[1, 1] + r[2, 2])
            w = (r[1, 0] - r[0, 1]) / s
            x = (r[0, 2] + r[2, 0]) / s
            y = (r[1, 2] + r[2, 1]) / s
            z = 0.25 * s
    return make_element(w, (x, y, z))
