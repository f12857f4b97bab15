"""Atom algebra of the Gaussian-weighted space of entire functions.

A function is stored as a finite combination of unit-norm atoms, each a
degree-k basis state displaced to a point of the plane.  Displacement maps
atoms to atoms exactly, so translation, inner products and norms are computed
from the atom data alone, with no series truncation anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "FockParams",
    "Atom",
    "FockFunction",
    "BasisCoefficients",
    "ParameterMismatchError",
    "basis_eval",
    "atom_eval",
    "compose_phase",
    "basis_function",
    "displaced_basis",
    "from_basis_coeffs",
]


class ParameterMismatchError(ValueError):
    """Two objects built for different weight parameters were combined."""


@dataclass(frozen=True)
class FockParams:
    """Weight parameter alpha > 0 of the Gaussian measure exp(-alpha*|z|^2)."""

    alpha: float

    def __post_init__(self):
        alpha = float(self.alpha)
        if not (math.isfinite(alpha) and alpha > 0):
            raise ValueError(f"alpha must be a positive finite real, got {self.alpha!r}")
        object.__setattr__(self, "alpha", alpha)


@dataclass(frozen=True)
class Atom:
    """One term coeff * (degree-k basis state displaced to lam).

    Every atom has unit norm before the coefficient is applied, so the atom
    data is all that norm and inner-product computations need.
    """

    lam: complex
    k: int
    coeff: complex = 1.0 + 0.0j

    def __post_init__(self):
        if int(self.k) != self.k or self.k < 0:
            raise ValueError(f"basis index k must be a nonnegative integer, got {self.k!r}")
        c = complex(self.coeff)
        if not (math.isfinite(c.real) and math.isfinite(c.imag)):
            raise ValueError("atom coefficient must be finite")
        object.__setattr__(self, "lam", complex(self.lam))
        object.__setattr__(self, "k", int(self.k))
        object.__setattr__(self, "coeff", c)


def basis_eval(k: int, z, params: FockParams):
    """Evaluate the degree-k orthonormal basis function sqrt(alpha^k/k!) * z^k.

    The value is assembled in the log domain, so large degrees (k of order
    500) neither overflow nor lose their phase.  `z` may be a scalar or an
    ndarray; the result matches the input shape.
    """
    if k < 0:
        raise ValueError("basis index k must be >= 0")
    zz = np.asarray(z, dtype=complex)
    scalar = zz.ndim == 0
    if k == 0:
        out = np.ones_like(zz)
    else:
        log_coeff = 0.5 * (k * math.log(params.alpha) - math.lgamma(k + 1))
        with np.errstate(divide="ignore", invalid="ignore"):
            out = np.exp(log_coeff + k * np.log(zz))
        out = np.where(zz == 0, 0.0 + 0.0j, out)
    return complex(out) if scalar else out


def atom_eval(atom: Atom, zeta, params: FockParams):
    """Evaluate coeff * T_lam e_k at zeta.

    The displacement acts as T_z f(w) = exp(alpha*conj(z)*w - alpha*|z|^2/2)
    * f(w - z); only the displacement factor and a basis evaluation at the
    shifted argument are needed.
    """
    zz = np.asarray(zeta, dtype=complex)
    scalar = zz.ndim == 0
    a = params.alpha
    lam = atom.lam
    pref = np.exp(a * lam.conjugate() * zz - 0.5 * a * (lam.real**2 + lam.imag**2))
    out = atom.coeff * pref * basis_eval(atom.k, zz - lam, params)
    return complex(out) if scalar else out


def compose_phase(w, z, params: FockParams) -> tuple[complex, complex]:
    """Phase and shift of the composition T_w T_z = phase * T_{w+z}.

    The phase is exp(-1j*alpha*Im(conj(z)*w)).  The exponent is kept as a real
    angle and turned into cos/sin separately, so the returned factor is
    unimodular to rounding.  Every module must take its signs from here.
    """
    w = complex(w)
    z = complex(z)
    angle = -params.alpha * (z.conjugate() * w).imag
    return complex(math.cos(angle), math.sin(angle)), w + z


@dataclass(frozen=True)
class BasisCoefficients:
    """Coefficients c_0..c_N of a projection onto the span of e_0..e_N.

    `defect` is the squared norm lost by the truncation, nonnegative up to
    rounding; it vanishes exactly when the projected function is a degree-N
    combination of undisplaced atoms.
    """

    params: FockParams
    coeffs: np.ndarray
    defect: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "coeffs", np.asarray(self.coeffs, dtype=complex))

    def squared_sum(self) -> float:
        return float(np.sum(np.abs(self.coeffs) ** 2))


@dataclass(frozen=True)
class FockFunction:
    """Finite combination of displaced basis atoms; the empty tuple is f = 0."""

    params: FockParams
    atoms: tuple[Atom, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "atoms", tuple(self.atoms))

    def __add__(self, other: "FockFunction") -> "FockFunction":
        self._check_params(other)
        return FockFunction(self.params, self.atoms + other.atoms)

    def __sub__(self, other: "FockFunction") -> "FockFunction":
        return self + (-1.0) * other

    def __mul__(self, scalar) -> "FockFunction":
        c = complex(scalar)
        return FockFunction(self.params, tuple(Atom(a.lam, a.k, a.coeff * c) for a in self.atoms))

    __rmul__ = __mul__

    def _check_params(self, other: "FockFunction"):
        if self.params.alpha != other.params.alpha:
            raise ParameterMismatchError(
                f"weight parameters differ: {self.params.alpha} vs {other.params.alpha}"
            )

    def evaluate(self, zeta):
        """Pointwise value at zeta (scalar or ndarray)."""
        zz = np.asarray(zeta, dtype=complex)
        scalar = zz.ndim == 0
        out = np.zeros_like(zz)
        for atom in self.atoms:
            out = out + atom_eval(atom, zz, self.params)
        return complex(out) if scalar else out

    def translate(self, z) -> "FockFunction":
        """Exact image under T_z: each atom moves to lam+z and picks up the
        composition phase, so the norm is preserved to rounding."""
        moved = []
        for a in self.atoms:
            phase, shift = compose_phase(z, a.lam, self.params)
            moved.append(Atom(shift, a.k, a.coeff * phase))
        return FockFunction(self.params, tuple(moved))

    def inner(self, other: "FockFunction") -> complex:
        """Inner product by bilinear expansion over atom pairs."""
        self._check_params(other)
        # imported here because kernels itself imports this module
        from .kernels import atom_pair_inner

        acc = 0.0 + 0.0j
        for a in self.atoms:
            for b in other.atoms:
                acc += a.coeff * b.coeff.conjugate() * atom_pair_inner(
                    a.lam, a.k, b.lam, b.k, self.params
                )
        return acc

    def norm(self) -> float:
        """Hilbert norm; zero for the empty function."""
        return math.sqrt(max(self.inner(self).real, 0.0))

    def to_basis_coeffs(self, n_max: int) -> BasisCoefficients:
        """Project onto span(e_0..e_{n_max}) and report the truncation defect."""
        if n_max < 0:
            raise ValueError("n_max must be >= 0")
        from .kernels import displacement_element

        coeffs = np.zeros(n_max + 1, dtype=complex)
        for n in range(n_max + 1):
            c = 0.0 + 0.0j
            for a in self.atoms:
                c += a.coeff * displacement_element(a.lam, n, a.k, self.params)
            coeffs[n] = c
        defect = self.inner(self).real - float(np.sum(np.abs(coeffs) ** 2))
        return BasisCoefficients(self.params, coeffs, defect)

    def sup_norm_estimate(self, radius: float, step: float) -> float:
        """Grid maximum of |f(z)| * exp(-alpha*|z|^2/2) over the square
        |Re z|, |Im z| <= radius.

        A plain grid scan: a supporting estimate, not a certified bound.
        """
        if step <= 0:
            raise ValueError("step must be positive")
        if radius < 0:
            raise ValueError("radius must be nonnegative")
        n = int(math.floor(radius / step + 1e-12))
        axis = step * np.arange(-n, n + 1)
        x = axis[None, :]
        y = axis[:, None]
        z = x + 1j * y
        weight = np.exp(-0.5 * self.params.alpha * (x**2 + y**2))
        vals = np.abs(self.evaluate(z)) * weight
        return float(vals.max())

    def merged(self) -> "FockFunction":
        """Merge duplicate (lam, k) atoms by summing coefficients.

        Keys compare by exact stored values; atoms whose merged coefficient is
        exactly zero are dropped.  Evaluation is invariant under merging.
        """
        acc: dict[tuple[complex, int], complex] = {}
        order: list[tuple[complex, int]] = []
        for a in self.atoms:
            key = (a.lam, a.k)
            if key not in acc:
                acc[key] = 0.0 + 0.0j
                order.append(key)
            acc[key] += a.coeff
        atoms = tuple(Atom(lam, k, acc[(lam, k)]) for lam, k in order if acc[(lam, k)] != 0)
        return FockFunction(self.params, atoms)


def basis_function(k: int, params: FockParams) -> FockFunction:
    """The basis state e_k as a one-atom function."""
    return FockFunction(params, (Atom(0.0, k, 1.0),))


def displaced_basis(lam, k: int, params: FockParams, coeff=1.0) -> FockFunction:
    """coeff * T_lam e_k as a one-atom function."""
    return FockFunction(params, (Atom(lam, k, coeff),))


def from_basis_coeffs(coeffs, params: FockParams) -> FockFunction:
    """Function with the given coefficients on the undisplaced basis."""
    cs = np.asarray(coeffs, dtype=complex)
    return FockFunction(params, tuple(Atom(0.0, n, c) for n, c in enumerate(cs) if c != 0))
