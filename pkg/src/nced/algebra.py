"""Biquaternion (complex quaternion) arithmetic.

A biquaternion is stored as a length-4 complex128 array ``[s, x, y, z]``:
scalar part ``s`` and vector part ``(x, y, z)``.  The basis satisfies
``e_a e_b = -delta_ab e0 + eps_abc e_c`` with ``eps_123 = +1``, and all dot /
cross products are complex-bilinear (no conjugation).
"""

import numpy as np

from ._backend import jit


def quat(s=0.0, v=None):
    """Build a biquaternion from a scalar and an optional 3-vector."""
    q = np.zeros(4, np.complex128)
    q[0] = s
    if v is not None:
        q[1:] = v
    return q


def from_vector(v):
    """Embed a complex 3-vector as a pure-vector biquaternion."""
    return quat(0.0, np.asarray(v, np.complex128))


def scalar_part(q):
    return q[0]


def vector_part(q):
    return np.asarray(q[1:4], np.complex128)


ONE = quat(1.0)
E1 = quat(0.0, (1.0, 0.0, 0.0))
E2 = quat(0.0, (0.0, 1.0, 0.0))
E3 = quat(0.0, (0.0, 0.0, 1.0))


@jit
def cdot(a, b):
    """Complex-bilinear dot product of 3-vectors."""
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


@jit
def ccross(a, b):
    """Complex-bilinear cross product of 3-vectors."""
    out = np.empty(3, np.complex128)
    out[0] = a[1] * b[2] - a[2] * b[1]
    out[1] = a[2] * b[0] - a[0] * b[2]
    out[2] = a[0] * b[1] - a[1] * b[0]
    return out


@jit
def mul(q, p):
    """Biquaternion product: (q0 p0 - q.p) e0 + (q0 p + p0 q + q x p)."""
    out = np.empty(4, np.complex128)
    out[0] = q[0] * p[0] - (q[1] * p[1] + q[2] * p[2] + q[3] * p[3])
    out[1] = q[0] * p[1] + p[0] * q[1] + (q[2] * p[3] - q[3] * p[2])
    out[2] = q[0] * p[2] + p[0] * q[2] + (q[3] * p[1] - q[1] * p[3])
    out[3] = q[0] * p[3] + p[0] * q[3] + (q[1] * p[2] - q[2] * p[1])
    return out


@jit
def conj_quat(q):
    """Quaternion conjugation: scalar kept, vector negated.  (qp)bar = pbar qbar."""
    out = np.empty(4, np.complex128)
    out[0] = q[0]
    out[1] = -q[1]
    out[2] = -q[2]
    out[3] = -q[3]
    return out


@jit
def conj_complex(q):
    """Complex conjugation: every component conjugated and the vector negated."""
    out = np.empty(4, np.complex128)
    out[0] = q[0].conjugate()
    out[1] = -q[1].conjugate()
    out[2] = -q[2].conjugate()
    out[3] = -q[3].conjugate()
    return out


@jit
def conj_components(q):
    """Componentwise complex conjugation without vector negation.

    Equals conj_quat(conj_complex(q)); a ring automorphism, unlike the two
    conjugations above.
    """
    out = np.empty(4, np.complex128)
    out[0] = q[0].conjugate()
    out[1] = q[1].conjugate()
    out[2] = q[2].conjugate()
    out[3] = q[3].conjugate()
    return out


@jit
def norm(q):
    """Bilinear square q qbar = q0^2 + q.q (a complex number, not a length)."""
    return q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3]


@jit
def sym_scalar(a, b):
    """Scalar part of the product of two pure-vector biquaternions: -(a.b)."""
    return -(a[0] * b[0] + a[1] * b[1] + a[2] * b[2])


def max_abs(q):
    """Largest component magnitude; convergence/defect metric for tests."""
    return float(np.max(np.abs(q)))
