"""Displacement matrix elements, Gram matrices and the quadrature oracle.

The closed form implemented here was derived from the Taylor expansion of a
displaced basis state and is treated as a hypothesis until the brute-force
quadrature oracle confirms it; the test suite pins that agreement.
"""

from __future__ import annotations

import hashlib
import math
import struct
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .core import FockFunction, FockParams, ParameterMismatchError, compose_phase

__all__ = [
    "GramMatrix",
    "DuplicateLabelError",
    "displacement_element",
    "atom_pair_inner",
    "gram_matrix",
    "quadrature_inner_oracle",
    "default_oracle_radius",
]


class DuplicateLabelError(ValueError):
    """An atom family contained the same (point, degree) label twice."""


def _genlaguerre(n: int, m: int, x: float) -> float:
    # three-term recurrence in the degree; stable for the moderate degrees in scope
    if n == 0:
        return 1.0
    prev, cur = 1.0, 1.0 + m - x
    for i in range(1, n):
        prev, cur = cur, ((2 * i + 1 + m - x) * cur - (i + m) * prev) / (i + 1)
    return cur


def displacement_element(z, j: int, k: int, params: FockParams) -> complex:
    """Overlap <T_z e_k, e_j> of a displaced basis state with a basis state.

    With lo = min(j, k), hi = max(j, k), d = hi - lo, x = alpha*|z|^2 and

        w = sqrt(alpha) * conj(z)   if j >= k,
        w = -sqrt(alpha) * z        if j < k,

    the value is  exp(-x/2) * sqrt(lo!/hi!) * w^d * L_lo^(d)(x),  where L is
    the generalized Laguerre polynomial.  The modulus factor is assembled in
    the log domain and the unit phase (w/|w|)^d separately, so large degree
    gaps cannot overflow.
    """
    if j < 0 or k < 0:
        raise ValueError("basis indices must be >= 0")
    z = complex(z)
    if z == 0:
        return 1.0 + 0.0j if j == k else 0.0 + 0.0j
    a = params.alpha
    x = a * (z.real**2 + z.imag**2)
    lo, hi = (j, k) if j <= k else (k, j)
    d = hi - lo
    sa = math.sqrt(a)
    w = sa * z.conjugate() if j >= k else -sa * z
    log_mag = -0.5 * x + 0.5 * (math.lgamma(lo + 1) - math.lgamma(hi + 1))
    if d:
        log_mag += d * 0.5 * math.log(w.real**2 + w.imag**2)
    angle = d * math.atan2(w.imag, w.real)
    value = _genlaguerre(lo, d, x) * math.exp(log_mag)
    return value * complex(math.cos(angle), math.sin(angle))


def atom_pair_inner(lam, k: int, mu, j: int, params: FockParams) -> complex:
    """<T_lam e_k, T_mu e_j>, reduced to one displacement element.

    Uses T_{-mu} T_lam = phase * T_{lam-mu} with the shared phase convention
    from compose_phase, so all modules agree on signs.
    """
    phase, shift = compose_phase(-complex(mu), complex(lam), params)
    return phase * displacement_element(shift, j, k, params)


@dataclass(frozen=True, eq=False)
class GramMatrix:
    """Inner products of an atom family; entry (p, q) = <atom_q, atom_p>.

    Hermitian and positive semidefinite up to rounding, with unit diagonal
    because every atom has unit norm.
    """

    params: FockParams
    labels: tuple[tuple[complex, int], ...]
    entries: np.ndarray

    def digest(self) -> str:
        """Short stable fingerprint of (alpha, labels) for report provenance."""
        h = hashlib.sha256()
        h.update(struct.pack("<d", self.params.alpha))
        for lam, k in self.labels:
            h.update(struct.pack("<ddq", lam.real, lam.imag, k))
        return h.hexdigest()[:12]


def gram_matrix(family, params: FockParams) -> GramMatrix:
    """Assemble the Gram matrix of the atoms T_lam e_k named by `family`.

    Entries are evaluated independently, so the result cannot depend on any
    assembly order.
    """
    labels = tuple((complex(lam), int(k)) for lam, k in family)
    if not labels:
        raise ValueError("atom family must be nonempty")
    if len(set(labels)) != len(labels):
        raise DuplicateLabelError("atom family labels must be distinct")
    n = len(labels)
    g = np.empty((n, n), dtype=complex)
    for p, (lam_p, k_p) in enumerate(labels):
        for q, (lam_q, k_q) in enumerate(labels):
            g[p, q] = atom_pair_inner(lam_q, k_q, lam_p, k_p, params)
    return GramMatrix(params, labels, g)


@lru_cache(maxsize=64)
def _leggauss(n: int):
    return np.polynomial.legendre.leggauss(n)


def default_oracle_radius(f: FockFunction, g: FockFunction) -> float:
    """Cutoff radius outside which the Gaussian tail is negligible.

    sqrt((max degree + 10)/alpha) + 4 around the farthest atom displacement.
    """
    atoms = f.atoms + g.atoms
    max_deg = max((a.k for a in atoms), default=0)
    max_disp = max((abs(a.lam) for a in atoms), default=0.0)
    return max_disp + math.sqrt((max_deg + 10) / f.params.alpha) + 4.0


def quadrature_inner_oracle(
    f: FockFunction,
    g: FockFunction,
    radius: float | None = None,
    n_r: int = 96,
    n_theta: int = 192,
) -> complex:
    """Brute-force inner product (alpha/pi) * integral of f * conj(g) *
    exp(-alpha*|z|^2) over the disc |z| <= radius.

    Gauss-Legendre nodes in the radius, uniform trapezoid nodes in the angle.
    Entirely independent of the closed-form displacement elements, which makes
    it the validating oracle for them; accuracy improves as radius, n_r and
    n_theta grow.
    """
    if f.params.alpha != g.params.alpha:
        raise ParameterMismatchError("inner-product arguments must share alpha")
    if n_r < 8 or n_theta < 8:
        raise ValueError("n_r and n_theta must be >= 8")
    if radius is None:
        radius = default_oracle_radius(f, g)
    if radius <= 0:
        raise ValueError("radius must be positive")
    alpha = f.params.alpha
    nodes, weights = _leggauss(int(n_r))
    r = 0.5 * radius * (nodes + 1.0)
    w_r = 0.5 * radius * weights
    theta = 2.0 * np.pi * np.arange(int(n_theta)) / int(n_theta)
    zgrid = r[:, None] * np.exp(1j * theta)[None, :]
    vals = f.evaluate(zgrid) * np.conj(g.evaluate(zgrid))
    radial = np.exp(-alpha * r**2) * r * w_r
    integral = (2.0 * np.pi / n_theta) * np.sum(vals * radial[:, None])
    return complex(alpha / np.pi * integral)
