"""Residual (stability) Lorentz subgroup of a noncommutativity vector.

For a nonisotropic K the group is the two-parameter Abelian family
``L = cos(chi) + sin(chi) * phi_hat`` with ``phi_hat`` the unit vector of
``phi = conj(K) = theta + i*epsilon`` and complex angle ``chi``; its real and
imaginary parts generate a rotation and a boost about the same (generally
complex) axis.  For an isotropic K (``K.K = 0``) the group is
``L = +-(1 + w * phi)``, an additive copy of the complex plane.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import lorentz
from . import noncomm
from .algebra import cdot, conj_components, mul, quat
from .constitutive import f_vector, h_from_f
from .errors import DegenerateError, KindMismatchError, ZeroKError
from .tolerances import DEFAULT as TOL


@dataclass(frozen=True)
class SmallGroupDescriptor:
    kind: str
    phi_hat: Optional[np.ndarray] = None     # nonisotropic: unit axis, phi_hat.phi_hat = 1
    phi: Optional[np.ndarray] = None          # isotropic: raw null direction
    sqrt_square: Optional[complex] = None     # nonisotropic: principal root of phi.phi


def describe(k, tol=TOL.classify):
    """Classify K and package the stabilizer parametrization data."""
    k = np.asarray(k, np.complex128)
    kind = noncomm.classify(k, tol)
    if kind == noncomm.ZERO:
        raise ZeroKError("zero noncommutativity: the stabilizer is the full Lorentz group")
    phi = noncomm.phi_from_k(k)
    if kind == noncomm.ISOTROPIC:
        return SmallGroupDescriptor(kind=kind, phi=phi)
    ssq = complex(np.sqrt(cdot(phi, phi)))
    return SmallGroupDescriptor(kind=kind, phi_hat=phi / ssq, sqrt_square=ssq)


def element(d, chi=None, w=None, sign=1):
    """One stabilizer element.

    Nonisotropic descriptors take a complex angle ``chi``; isotropic ones a
    complex displacement ``w`` and an overall ``sign`` of +-1.
    """
    if d.kind == noncomm.NONISOTROPIC:
        if chi is None or w is not None:
            raise KindMismatchError("nonisotropic small group is parametrized by chi")
        chi = complex(chi)
        return quat(np.cos(chi), np.sin(chi) * d.phi_hat)
    if chi is not None or w is None:
        raise KindMismatchError("isotropic small group is parametrized by w (and sign)")
    if sign not in (1, -1):
        raise KindMismatchError("sign must be +1 or -1")
    return sign * quat(1.0, complex(w) * d.phi)


def stabilizes(L, k):
    """Max-component residual of the transported K against K itself."""
    k = np.asarray(k, np.complex128)
    return float(np.max(np.abs(lorentz.act_vector(L, k) - k)))


def group_law_check(d, p1, p2):
    """Defect of the additive parameter law under actual composition."""
    if d.kind == noncomm.NONISOTROPIC:
        e1 = element(d, chi=p1)
        e2 = element(d, chi=p2)
        target = element(d, chi=complex(p1) + complex(p2))
    else:
        w1, s1 = p1 if isinstance(p1, tuple) else (p1, 1)
        w2, s2 = p2 if isinstance(p2, tuple) else (p2, 1)
        e1 = element(d, w=w1, sign=s1)
        e2 = element(d, w=w2, sign=s2)
        target = element(d, w=complex(w1) + complex(w2), sign=s1 * s2)
    return float(np.max(np.abs(mul(e1, e2) - target)))


def verify_constitutive_invariance(k, L, E, B):
    """Residual of the constitutive map under L with the medium held fixed.

    Vanishes exactly when L stabilizes K; strictly positive for generic
    fields otherwise.
    """
    k = np.asarray(k, np.complex128)
    f = f_vector(E, B)
    h = h_from_f(f, k)
    fp = lorentz.act_vector(L, f)
    hp = lorentz.act_vector(L, h)
    return float(np.max(np.abs(h_from_f(fp, k) - hp)))


def _orthonormal_rows(r1, r2):
    r1 = r1 / np.linalg.norm(r1)
    r2 = r2 - (r2 @ r1) * r1
    n2 = np.linalg.norm(r2)
    if n2 < 1e-12:
        raise DegenerateError("degenerate direction pair in canonical reduction")
    r2 = r2 / n2
    return np.vstack([r1, r2, np.cross(r1, r2)])


def _sandwich_to_element(n_box):
    """Lorentz element whose vector action is the sandwich by ``n_box``."""
    L = conj_components(n_box)
    return lorentz.make_element(L[0], L[1:])


def canonical_form(k, tol=TOL.classify):
    """Lorentz element carrying a nonisotropic K to the frame where its
    stabilizer axis is a real unit vector; returns (L, transported K)."""
    k = np.asarray(k, np.complex128)
    if noncomm.classify(k, tol) != noncomm.NONISOTROPIC:
        raise KindMismatchError("canonical_form needs a nonisotropic K; "
                                "use canonical_form_isotropic for null K")
    d = describe(k, tol)
    n, m = d.phi_hat.real, d.phi_hat.imag
    if np.max(np.abs(m)) <= 1e-13:
        L = lorentz.identity()
        return L, k.copy()
    a, b = np.linalg.norm(n), np.linalg.norm(m)
    rot = _orthonormal_rows(n, m)
    n_rot = lorentz.element_from_rotation_matrix(rot)
    # null the imaginary part: after rotating (n -> a x, m -> b y), a boost
    # along z with th(2 beta) = -b/a lands the axis exactly on x
    beta = 0.5 * np.arctanh(-b / a)
    n_boost = lorentz.boost((0.0, 0.0, 1.0), beta)
    L = _sandwich_to_element(mul(n_boost, n_rot))
    return L, lorentz.act_vector(L, k)


def canonical_form_isotropic(k, tol=TOL.classify):
    """Variant for isotropic K: carries phi = conj(K) to the reference null
    vector (1, -i, 0); returns (L, transported K)."""
    k = np.asarray(k, np.complex128)
    if noncomm.classify(k, tol) != noncomm.ISOTROPIC:
        raise KindMismatchError("canonical_form_isotropic needs an isotropic K")
    phi = noncomm.phi_from_k(k)
    p, q = phi.real, phi.imag
    if np.linalg.norm(q) < 1e-12 * np.linalg.norm(p):
        raise DegenerateError("null direction collapsed; K is too close to zero")
    rot = _orthonormal_rows(p, -q)
    n_rot = lorentz.element_from_rotation_matrix(rot)
    # a z-boost scales the null transverse vector (1, -i, 0) by exp(-2 beta)
    beta = 0.5 * np.log(np.linalg.norm(p))
    n_boost = lorentz.boost((0.0, 0.0, 1.0), beta)
    L = _sandwich_to_element(mul(n_boost, n_rot))
    return L, lorentz.act_vector(L, k)
