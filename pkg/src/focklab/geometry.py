"""Divisors, their discs and window checks of the covering and disjointness
conditions behind sampling, interpolation and uniqueness.

A divisor entry (lam, m) carries the disc D(lam, sqrt(m/alpha)); checks use
the padded (+C) or shrunk (-C) radii.  The plane is probed on a finite window
disc, so every verdict is an on-window estimate, never a proof.
"""

from __future__ import annotations

import hashlib
import math
import struct
from dataclasses import dataclass

import numpy as np

from .core import FockParams

__all__ = [
    "Divisor",
    "Window",
    "GeometryVerdicts",
    "ShrunkCoverResult",
    "disc_radius",
    "overlap_count_at",
    "max_overlap",
    "coverage_defect",
    "pairwise_disjoint",
    "theorem_verdicts",
    "rescale_to_unit_alpha",
]


@dataclass(frozen=True)
class Divisor:
    """Finite set of pairwise-distinct points with positive multiplicities."""

    params: FockParams
    entries: tuple[tuple[complex, int], ...]

    def __post_init__(self):
        entries = tuple((complex(lam), int(m)) for lam, m in self.entries)
        if any(m < 1 for _, m in entries):
            raise ValueError("multiplicities must be >= 1")
        points = [lam for lam, _ in entries]
        if len(set(points)) != len(points):
            raise ValueError("divisor points must be pairwise distinct")
        object.__setattr__(self, "entries", entries)

    def points(self) -> np.ndarray:
        return np.array([lam for lam, _ in self.entries], dtype=complex)

    def mults(self) -> np.ndarray:
        return np.array([m for _, m in self.entries], dtype=int)

    def total_multiplicity(self) -> int:
        return int(sum(m for _, m in self.entries))

    def atom_labels(self) -> list[tuple[complex, int]]:
        """Measurement labels (lam, k), k < m, in divisor order, k ascending."""
        return [(lam, k) for lam, m in self.entries for k in range(m)]

    def digest(self) -> str:
        """Short stable fingerprint of (alpha, entries) for report provenance."""
        h = hashlib.sha256()
        h.update(struct.pack("<d", self.params.alpha))
        for lam, m in self.entries:
            h.update(struct.pack("<ddq", lam.real, lam.imag, m))
        return h.hexdigest()[:12]


@dataclass(frozen=True)
class Window:
    """Grid-probed disc standing in for the plane in geometric checks."""

    radius: float
    grid_step: float

    def __post_init__(self):
        if not (self.radius > 0):
            raise ValueError("window radius must be positive")
        if not (0 < self.grid_step <= self.radius / 10):
            raise ValueError("grid_step must satisfy 0 < grid_step <= radius/10")

    def grid(self) -> np.ndarray:
        """Complex points of the square grid of pitch grid_step, clipped to
        the disc |z| <= radius; deterministic row-major order."""
        n = int(math.floor(self.radius / self.grid_step + 1e-9))
        axis = self.grid_step * np.arange(-n, n + 1)
        z = (axis[None, :] + 1j * axis[:, None]).ravel()
        return z[np.abs(z) <= self.radius * (1 + 1e-12)]


def disc_radius(mult: int, params: FockParams, c: float, sign: int) -> float | None:
    """Disc radius sqrt(m/alpha) + C (sign +1) or sqrt(m/alpha) - C (sign -1).

    Under sign -1 the entry only counts when m > alpha*C^2; otherwise None,
    meaning the entry is excluded from the check.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    base = math.sqrt(mult / params.alpha)
    if sign == 1:
        return base + c
    if mult > params.alpha * c * c:
        return base - c
    return None


def overlap_count_at(divisor: Divisor, z) -> int:
    """Number of open discs D(lam, sqrt(m/alpha)) containing z."""
    z = complex(z)
    inv_alpha = 1.0 / divisor.params.alpha
    count = 0
    for lam, m in divisor.entries:
        d = z - lam
        if d.real**2 + d.imag**2 < m * inv_alpha:
            count += 1
    return count


def max_overlap(divisor: Divisor, window: Window) -> int:
    """Window maximum of the disc-overlap count.

    A lower estimate of the plane-wide supremum in the finite overlap
    condition, since only grid points inside the window are probed.
    """
    z = window.grid()
    counts = np.zeros(z.shape, dtype=int)
    inv_alpha = 1.0 / divisor.params.alpha
    for lam, m in divisor.entries:
        counts += np.abs(z - lam) ** 2 < m * inv_alpha
    return int(counts.max()) if counts.size else 0


def coverage_defect(
    divisor: Divisor,
    c: float,
    sign: int,
    window: Window,
    hole_radius: float = 0.0,
) -> np.ndarray:
    """Grid points of the annulus hole_radius <= |z| <= radius in no disc.

    Discs are open, with radii per disc_radius; entries with absent shrunk
    radius are skipped.  An empty result means the divisor covers the probed
    annulus at this C.  Points are reported verbatim, in grid order.
    """
    if not (0 <= hole_radius < window.radius):
        raise ValueError("hole_radius must satisfy 0 <= hole_radius < window radius")
    z = window.grid()
    z = z[np.abs(z) >= hole_radius]
    covered = np.zeros(z.shape, dtype=bool)
    for lam, m in divisor.entries:
        r = disc_radius(m, divisor.params, c, sign)
        if r is None or r <= 0:
            continue
        covered |= np.abs(z - lam) ** 2 < r * r
    return z[~covered]


def pairwise_disjoint(
    divisor: Divisor, c: float, sign: int
) -> tuple[bool, tuple[complex, complex] | None]:
    """Whether the padded/shrunk discs are pairwise disjoint.

    Open discs: boundary tangency counts as disjoint.  Returns the flag and
    the first violating point pair in entry order, or None.
    """
    kept = []
    for lam, m in divisor.entries:
        r = disc_radius(m, divisor.params, c, sign)
        if r is not None:
            kept.append((lam, r))
    for i in range(len(kept)):
        lam_i, r_i = kept[i]
        for j in range(i + 1, len(kept)):
            lam_j, r_j = kept[j]
            if abs(lam_i - lam_j) < r_i + r_j:
                return False, (lam_i, lam_j)
    return True, None


@dataclass(frozen=True, eq=False)
class ShrunkCoverResult:
    """Coverage outcome of the C-shrunk discs on the probed annulus."""

    c: float
    holds: bool
    uncovered: np.ndarray


@dataclass(frozen=True, eq=False)
class GeometryVerdicts:
    """Window verdicts for one divisor.

    padded_cover: some tested C makes the +C discs cover the window disc (the
    necessary side of the sampling criterion).  shrunk_cover_by_c: per tested
    C, whether the -C discs cover the annulus outside the hole (the sufficient
    side).  shrunk/padded_disjoint: disjointness of the -C / +C discs (the
    necessary / sufficient sides of the interpolation criterion).  bare_cover:
    coverage at C = 0 outside the hole (the uniqueness condition, which rules
    out zero divisors).  exclusivity_consistent: the sufficient sides of
    sampling and interpolation were not certified simultaneously.
    """

    finite_overlap_bound: int
    padded_cover_holds: bool
    padded_cover_witness_c: float | None
    shrunk_cover_by_c: tuple[ShrunkCoverResult, ...]
    shrunk_disjoint_holds: bool
    shrunk_disjoint_witness_c: float | None
    padded_disjoint_holds: bool
    padded_disjoint_witness_c: float | None
    bare_cover_holds: bool
    hole_radius: float
    exclusivity_consistent: bool


def theorem_verdicts(
    divisor: Divisor,
    window: Window,
    c_list,
    hole_radius: float = 0.0,
) -> GeometryVerdicts:
    """Assemble all window verdicts for the divisor.

    Existential quantifiers over C > 0 are probed on the finite ascending
    c_list; universal ones are recorded per tested C.  Deterministic: the same
    inputs always produce identical verdicts.
    """
    cs = [float(c) for c in c_list]
    if not cs:
        raise ValueError("c_list must be nonempty")
    if any(c <= 0 for c in cs) or sorted(cs) != cs:
        raise ValueError("c_list must be positive and ascending")

    bound = max_overlap(divisor, window)

    padded_witness = None
    for c in cs:
        if coverage_defect(divisor, c, +1, window, 0.0).size == 0:
            padded_witness = c
            break

    shrunk_results = []
    for c in cs:
        uncov = coverage_defect(divisor, c, -1, window, hole_radius)
        shrunk_results.append(ShrunkCoverResult(c, holds=uncov.size == 0, uncovered=uncov))
    shrunk_cover = tuple(shrunk_results)

    shrunk_disjoint_witness = None
    for c in cs:
        if pairwise_disjoint(divisor, c, -1)[0]:
            shrunk_disjoint_witness = c
            break
    padded_disjoint_witness = None
    for c in cs:
        if pairwise_disjoint(divisor, c, +1)[0]:
            padded_disjoint_witness = c
            break

    bare_cover = coverage_defect(divisor, 0.0, +1, window, hole_radius).size == 0

    windowed = sum(1 for lam, _ in divisor.entries if abs(lam) <= window.radius)
    if windowed < 2:
        exclusive = True
    else:
        all_shrunk = all(r.holds for r in shrunk_cover)
        exclusive = not (all_shrunk and padded_disjoint_witness is not None)

    return GeometryVerdicts(
        finite_overlap_bound=bound,
        padded_cover_holds=padded_witness is not None,
        padded_cover_witness_c=padded_witness,
        shrunk_cover_by_c=shrunk_cover,
        shrunk_disjoint_holds=shrunk_disjoint_witness is not None,
        shrunk_disjoint_witness_c=shrunk_disjoint_witness,
        padded_disjoint_holds=padded_disjoint_witness is not None,
        padded_disjoint_witness_c=padded_disjoint_witness,
        bare_cover_holds=bare_cover,
        hole_radius=float(hole_radius),
        exclusivity_consistent=exclusive,
    )


def rescale_to_unit_alpha(divisor: Divisor) -> Divisor:
    """Change of variable z -> sqrt(alpha)*z, mapping to alpha = 1.

    Disc radii map to sqrt(alpha) times the originals, so verdicts computed
    with C, window radius and grid step scaled by sqrt(alpha) coincide with
    the originals.
    """
    s = math.sqrt(divisor.params.alpha)
    if divisor.params.alpha == 1.0:
        return divisor
    return Divisor(FockParams(1.0), tuple((lam * s, m) for lam, m in divisor.entries))
