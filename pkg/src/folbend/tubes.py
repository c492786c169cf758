"""Principal-curvature profiles of geodesic spheres and distance tubes.

A radial or tubular foliation of a model space is determined along a unit
normal geodesic by a handful of scalar Jacobi equations f'' + kappa*f = 0.
Each *branch* carries one curvature eigenvalue kappa, a multiplicity, and
an initial condition:

``NORMAL``   f(0) = 0, f'(0) = 1 -- directions spreading out from the center;
``TANGENT``  f(0) = 1, f'(0) = 0 -- directions tangent to the focal sub-space.

From the branch solutions we get the leaves' principal curvature functions
alpha = f'/f and the volume density theta = prod f**mult, defined up to a
constant factor (supplied explicitly only where the leaves are full
geodesic spheres, so that absolute volumes make sense).

The catalog covers exactly the pairs whose curvature data is available:
points in all five families, totally geodesic S^k in S^m (likewise RP),
CP^p in CP^m and HP^p in HP^m.  The two classical pairs with a
different normal geometry (RP^m inside CP^m, CP^m inside HP^m) are
rejected with NotComputableError: their tube profile is not determined by
the spectral data this package carries.
"""
from __future__ import annotations

import csv
import math
from dataclasses import dataclass, replace
from enum import Enum
from typing import Callable, Optional

import numpy as np

from .spaces import Family, FocalVariety, ModelSpace

__all__ = [
    "InitKind",
    "JacobiBranch",
    "TubeProfile",
    "NotComputableError",
    "jacobi_solution",
    "jacobi_ode_oracle",
    "tube_profile",
    "write_profile_csv",
]


class InitKind(Enum):
    NORMAL = "normal"
    TANGENT = "tangent"


@dataclass(frozen=True)
class JacobiBranch:
    kappa: float
    multiplicity: int
    init: InitKind

    def __post_init__(self) -> None:
        if not (math.isfinite(self.kappa) and self.kappa >= 0):
            raise ValueError("branch curvature must be finite and nonnegative")
        if not isinstance(self.multiplicity, int) or self.multiplicity < 1:
            raise ValueError("branch multiplicity must be a positive integer")


class NotComputableError(ValueError):
    """The pair is classical but its tube data is not computable from the
    spectral information this catalog quotes."""


def jacobi_solution(kappa: float, init: InitKind) -> tuple[Callable, Callable]:
    """Closed-form (f, alpha) for f'' + kappa*f = 0 with the given initial data.

    Both callables accept scalars or numpy arrays.  alpha = f'/f blows up
    where f vanishes; callers sample it only inside (0, first zero of f).
    """
    if not (math.isfinite(kappa) and kappa >= 0):
        raise ValueError("kappa must be finite and nonnegative")
    s = math.sqrt(kappa)
    if init is InitKind.NORMAL:
        if kappa == 0.0:
            return (lambda r: np.asarray(r, dtype=float) + 0.0,
                    lambda r: 1.0 / np.asarray(r, dtype=float))
        return (lambda r: np.sin(s * np.asarray(r, dtype=float)) / s,
                lambda r: s / np.tan(s * np.asarray(r, dtype=float)))
    if init is InitKind.TANGENT:
        if kappa == 0.0:
            return (lambda r: np.ones_like(np.asarray(r, dtype=float)),
                    lambda r: np.zeros_like(np.asarray(r, dtype=float)))
        return (lambda r: np.cos(s * np.asarray(r, dtype=float)),
                lambda r: -s * np.tan(s * np.asarray(r, dtype=float)))
    raise ValueError(f"unknown initial condition {init!r}")


def jacobi_ode_oracle(kappa: float, init: InitKind, r: float, steps: int = 1024) -> float:
    """f(r) by fixed-step classic fourth-order integration of f'' = -kappa*f.

    Deliberately independent of the closed forms; global error is O(steps**-4).
    """
    if not (math.isfinite(kappa) and kappa >= 0):
        raise ValueError("kappa must be finite and nonnegative")
    if r < 0 or not math.isfinite(r):
        raise ValueError("radius must be finite and nonnegative")
    if not isinstance(steps, int) or steps < 16:
        raise ValueError("need at least 16 integration steps")
    if init is InitKind.NORMAL:
        y, yp = 0.0, 1.0
    elif init is InitKind.TANGENT:
        y, yp = 1.0, 0.0
    else:
        raise ValueError(f"unknown initial condition {init!r}")
    h = r / steps
    for _ in range(steps):
        k1y, k1p = yp, -kappa * y
        k2y, k2p = yp + 0.5 * h * k1p, -kappa * (y + 0.5 * h * k1y)
        k3y, k3p = yp + 0.5 * h * k2p, -kappa * (y + 0.5 * h * k2y)
        k4y, k4p = yp + h * k3p, -kappa * (y + h * k3y)
        y += h * (k1y + 2 * k2y + 2 * k3y + k4y) / 6.0
        yp += h * (k1p + 2 * k2p + 2 * k3p + k4p) / 6.0
    return y


def _first_zero(kappa: float, init: InitKind) -> float:
    if kappa == 0.0:
        return math.inf
    s = math.sqrt(kappa)
    return math.pi / s if init is InitKind.NORMAL else math.pi / (2.0 * s)


def _unit_sphere_area(n: int) -> float:
    # Surface area of the unit (n-1)-sphere in R^n.
    return 2.0 * math.pi ** (n / 2.0) / math.gamma(n / 2.0)


@dataclass(frozen=True)
class TubeProfile:
    """Branches, cut distance and density of one cataloged foliation.

    ``theta(mu)`` vanishes except in the one cataloged case where the
    boundary leaf is a regular smooth leaf rather than a focal set (the
    antipodal cross-section of RP^m around a point); that case is marked by
    ``boundary_leaf_regular``.
    """

    space: ModelSpace
    focal: FocalVariety
    branches: tuple[JacobiBranch, ...]
    mu: float
    area_constant: Optional[float]
    boundary_leaf_regular: bool
    fs: tuple[Callable, ...]
    alphas: tuple[Callable, ...]

    def theta(self, r):
        """Volume density (up to the constant factor) at tube radius r."""
        r = np.asarray(r, dtype=float)
        out = np.ones_like(r)
        for f, branch in zip(self.fs, self.branches):
            out = out * f(r) ** branch.multiplicity
        return out

    def alpha_values(self, r) -> list:
        """Per-branch principal curvature values at tube radius r."""
        return [alpha(r) for alpha in self.alphas]

    def sum_alpha(self, r):
        """Multiplicity-weighted sum of principal curvatures (mean curvature)."""
        r = np.asarray(r, dtype=float)
        out = np.zeros_like(r)
        for alpha, branch in zip(self.alphas, self.branches):
            out = out + branch.multiplicity * alpha(r)
        return out

    def sum_alpha_sq(self, r):
        """Multiplicity-weighted sum of squared principal curvatures."""
        r = np.asarray(r, dtype=float)
        out = np.zeros_like(r)
        for alpha, branch in zip(self.alphas, self.branches):
            out = out + branch.multiplicity * alpha(r) ** 2
        return out

    def bending_density(self, r):
        """Integrand of the total bending against dr: 0.5 * sum m*alpha^2 * theta."""
        return 0.5 * self.sum_alpha_sq(r) * self.theta(r)

    def second_mean_curvature(self, r):
        """Sum of pairwise products of principal curvatures (with multiplicity)."""
        return 0.5 * (self.sum_alpha(r) ** 2 - self.sum_alpha_sq(r))

    def reordered(self, permutation) -> "TubeProfile":
        """Same profile with branches listed in a different order."""
        idx = list(permutation)
        if sorted(idx) != list(range(len(self.branches))):
            raise ValueError("permutation must reindex the branches exactly")
        return replace(
            self,
            branches=tuple(self.branches[i] for i in idx),
            fs=tuple(self.fs[i] for i in idx),
            alphas=tuple(self.alphas[i] for i in idx),
        )

    def samples(self, count: int = 200) -> np.ndarray:
        """Interior sample table: columns r, alpha per branch, theta."""
        if count < 2:
            raise ValueError("need at least two sample points")
        r = np.linspace(0.0, self.mu, count + 2)[1:-1]
        cols = [r] + self.alpha_values(r) + [self.theta(r)]
        return np.column_stack(cols)


def _build(space, focal, branch_data, mu, area_constant=None, regular=False) -> TubeProfile:
    branches = tuple(JacobiBranch(k, m, i) for k, m, i in branch_data if m > 0)
    pairs = [jacobi_solution(b.kappa, b.init) for b in branches]
    return TubeProfile(
        space=space,
        focal=focal,
        branches=branches,
        mu=mu,
        area_constant=area_constant,
        boundary_leaf_regular=regular,
        fs=tuple(p[0] for p in pairs),
        alphas=tuple(p[1] for p in pairs),
    )


def tube_profile(space: ModelSpace, focal: FocalVariety) -> TubeProfile:
    """Branch data, cut distance and density for one cataloged pair.

    Raises ValueError for pairs outside the catalog and NotComputableError
    for the two classical pairs whose tube data the catalog cannot supply
    (RP^m in CP^m and CP^m in HP^m).
    """
    lam = space.lam
    n = space.dim
    root = math.sqrt(lam)
    fam = space.family
    N, T = InitKind.NORMAL, InitKind.TANGENT

    if focal.kind == "point":
        if fam in (Family.SPHERE, Family.REAL_PROJECTIVE):
            if space.m < 2:
                raise ValueError(f"no radial foliation on {space}: need dimension >= 2")
            mu = math.pi / root if fam is Family.SPHERE else math.pi / (2.0 * root)
            return _build(
                space, focal, [(lam, n - 1, N)], mu,
                area_constant=_unit_sphere_area(n),
                regular=(fam is Family.REAL_PROJECTIVE),
            )
        if fam in (Family.COMPLEX_PROJECTIVE, Family.QUATERNIONIC_PROJECTIVE) and space.m < 2:
            raise ValueError(f"{space} is isometric to a sphere; use the sphere catalog entry")
        nu = space.invariant_count
        return _build(
            space, focal,
            [(lam, n - 1 - nu, N), (4.0 * lam, nu, N)],
            math.pi / (2.0 * root),
        )

    sub, p = focal.sub_family, focal.p
    if fam in (Family.SPHERE, Family.REAL_PROJECTIVE) and sub is fam:
        if not (1 <= p <= space.m - 1):
            raise ValueError(f"no totally geodesic {focal.label} inside {space}")
        return _build(
            space, focal,
            [(lam, p, T), (lam, space.m - 1 - p, N)],
            math.pi / (2.0 * root),
        )
    if fam is Family.COMPLEX_PROJECTIVE and sub is Family.COMPLEX_PROJECTIVE:
        if space.m < 2 or not (1 <= p <= space.m - 1):
            raise ValueError(f"no totally geodesic {focal.label} inside {space}")
        return _build(
            space, focal,
            [(lam, 2 * p, T), (lam, 2 * (space.m - 1 - p), N), (4.0 * lam, 1, N)],
            math.pi / (2.0 * root),
        )
    if fam is Family.QUATERNIONIC_PROJECTIVE and sub is Family.QUATERNIONIC_PROJECTIVE:
        if space.m < 2 or not (1 <= p <= space.m - 1):
            raise ValueError(f"no totally geodesic {focal.label} inside {space}")
        return _build(
            space, focal,
            [(lam, 4 * p, T), (lam, 4 * (space.m - 1 - p), N), (4.0 * lam, 3, N)],
            math.pi / (2.0 * root),
        )
    if fam is Family.COMPLEX_PROJECTIVE and sub is Family.REAL_PROJECTIVE and p == space.m:
        raise NotComputableError(
            f"tube data for {focal.label} inside {space.label} is not computable "
            "from the quoted curvature data"
        )
    if fam is Family.QUATERNIONIC_PROJECTIVE and sub is Family.COMPLEX_PROJECTIVE and p == space.m:
        raise NotComputableError(
            f"tube data for {focal.label} inside {space.label} is not computable "
            "from the quoted curvature data"
        )
    raise ValueError(f"pair ({space.label}, {focal.label}) is outside the tube catalog")


def write_profile_csv(profile: TubeProfile, path: str, count: int = 200) -> None:
    """Write the interior sample table as CSV: r, alpha_1..alpha_B, theta."""
    table = profile.samples(count)
    header = ["r"] + [f"alpha_{i + 1}" for i in range(len(profile.branches))] + ["theta"]
    with open(path, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(header)
        for row in table:
            writer.writerow([repr(float(x)) for x in row])
