"""Vertex spectra, empirical spectral measures, and torus limit values.

The discrete torus of dimension d and side N is 2d-regular with explicit
transition eigenvalues (1/d) sum_j cos(2 pi k_j / N) over lattice points k.
As N grows, the generalized zeta reciprocal converges to

    (1 - u^2)^(d - 1) * exp( integral over [0, 2 pi]^d of log arg(theta) )

with the integral taken against the uniform product measure. The quadrature
here is the periodic trapezoid rule, which for these integrands is a plain
average over a uniform grid; on grid G it reproduces the side-G torus value
exactly, because the grid eigenvalue multiset is the side-G spectrum.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from .errors import FamilyParameterError, ZetaDomainError
from .graphs import Graph

__all__ = [
    "SpectrumList",
    "EmpiricalSpectralMeasure",
    "ConvergenceRow",
    "ConvergenceStudy",
    "graph_spectrum",
    "empirical_spectral_measure",
    "torus_spectrum",
    "torus_prefactor",
    "finite_torus_zeta_reciprocal",
    "torus_limit_log_mean",
    "torus_limit_zeta_reciprocal",
    "convergence_study",
    "DIMENSION_CAP",
    "MIN_GRID",
]

DIMENSION_CAP = 4
MIN_GRID = 8

_OPERATORS = ("adjacency", "transition", "laplacian")


@dataclass(frozen=True)
class SpectrumList:
    """Eigenvalues of one vertex operator, tagged with their provenance."""

    operator: str
    source: str
    values: tuple[float, ...]

    def __post_init__(self) -> None:
        if self.operator not in _OPERATORS:
            raise ValueError(f"unknown operator {self.operator!r}")
        if self.source not in ("numeric", "closed-form"):
            raise ValueError(f"unknown source {self.source!r}")


@dataclass(frozen=True)
class EmpiricalSpectralMeasure:
    """Uniform atomic measure on a spectrum with exact rational weights."""

    points: tuple[float, ...]
    weights: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.points) != len(self.weights):
            raise ValueError("points and weights must have equal length")
        if not self.points:
            raise ValueError("empirical measure needs at least one point")
        total = sum(self.weights, Fraction(0))
        if total != 1:
            raise ValueError(f"weights sum to {total}, expected exactly 1")

    @classmethod
    def uniform(cls, points: Sequence[float]) -> "EmpiricalSpectralMeasure":
        n = len(points)
        w = Fraction(1, n)
        return cls(points=tuple(float(x) for x in points), weights=(w,) * n)

    def average(self, f: Callable[[float], float]) -> float:
        return math.fsum(float(w) * f(x) for x, w in zip(self.points, self.weights))


def graph_spectrum(graph: Graph, operator: str = "transition") -> SpectrumList:
    """Ascending eigenvalues of the adjacency, transition, or Laplacian matrix.

    The transition matrix D^-1 A is similar to the symmetric normalization
    D^-1/2 A D^-1/2, so its spectrum is real and is computed from the
    symmetric form.
    """
    if operator not in _OPERATORS:
        raise ValueError(f"unknown operator {operator!r}; pick one of {_OPERATORS}")
    n = graph.num_vertices
    a = np.zeros((n, n), dtype=float)
    for i, neighbors in enumerate(graph.adjacency):
        for j in neighbors:
            a[i, j] = 1.0
    if operator == "adjacency":
        sym = a
    elif operator == "transition":
        inv_sqrt = 1.0 / np.sqrt(np.array(graph.degree_profile, dtype=float))
        sym = a * inv_sqrt[:, None] * inv_sqrt[None, :]
    else:
        sym = np.diag(np.array(graph.degree_profile, dtype=float)) - a
    values = np.linalg.eigvalsh(sym)
    return SpectrumList(operator=operator, source="numeric", values=tuple(values.tolist()))


def empirical_spectral_measure(
    graph: Graph, operator: str = "transition"
) -> EmpiricalSpectralMeasure:
    """Spectral measure placing weight 1/nu on each eigenvalue."""
    return EmpiricalSpectralMeasure.uniform(graph_spectrum(graph, operator).values)


def _check_torus_params(d: int, n: int, allow_high_dimension: bool) -> None:
    if d < 1:
        raise FamilyParameterError(f"torus dimension must be at least 1, got {d}")
    if not allow_high_dimension and d > DIMENSION_CAP:
        raise FamilyParameterError(
            f"torus dimension {d} exceeds the default cap of {DIMENSION_CAP}; "
            f"grid sizes grow as G^d, pass allow_high_dimension=True to override"
        )
    if n < 3:
        raise FamilyParameterError(
            f"torus side must be at least 3 to avoid parallel edges, got {n}"
        )


def torus_spectrum(
    d: int, n: int, operator: str = "transition", allow_high_dimension: bool = False
) -> SpectrumList:
    """Closed-form spectrum of the side-n d-dimensional discrete torus.

    Values are listed in lexicographic order of the lattice point
    k in {0..n-1}^d: the adjacency eigenvalue at k is
    2 * sum_j cos(2 pi k_j / n), the transition eigenvalue is that divided
    by the degree 2d, and the Laplacian eigenvalue is 2d minus it.
    """
    values = _torus_values(d, n, operator, allow_high_dimension)
    return SpectrumList(
        operator=operator, source="closed-form", values=tuple(values.tolist())
    )


def _torus_values(
    d: int, n: int, operator: str, allow_high_dimension: bool
) -> np.ndarray:
    if operator not in _OPERATORS:
        raise ValueError(f"unknown operator {operator!r}; pick one of {_OPERATORS}")
    _check_torus_params(d, n, allow_high_dimension)
    axis = np.cos(2.0 * np.pi * np.arange(n) / n)
    total = axis
    for _ in range(d - 1):
        total = total[..., None] + axis
    total = total.reshape(-1)
    if operator == "adjacency":
        return 2.0 * total
    if operator == "transition":
        return total / d
    return 2.0 * (d - total)


def torus_prefactor(d: int, u: float) -> float:
    """Factor (1 - u^2)^(d - 1) multiplying the spectral exponential.

    The exponent is (m - nu)/nu for the side-N torus, which equals d - 1
    independently of N.
    """
    return float(math.pow(1.0 - float(u) * float(u), d - 1))


def _check_domain(d: int, u: float, which: str) -> int:
    """Log-argument positivity checks for the torus evaluations; returns q.

    Only the determinant factors are constrained: the torus prefactor
    exponent d - 1 is an integer, so 1 - u^2 may take any sign here.
    """
    if which not in ("grover", "ihara"):
        raise ValueError(f"kind must be grover or ihara, not {which!r}")
    q = 2 * d - 1
    # the determinant factor is affine in the eigenvalue, so positivity on
    # the whole spectrum range [-1, 1] follows from the two endpoints
    for lam in (-1.0, 1.0):
        arg = _factor(u, q, which, lam)
        if arg <= 0.0:
            raise ZetaDomainError(
                f"determinant factor {arg} at spectrum endpoint {lam} is not "
                f"positive for u = {u} ({which} kind, dimension {d})"
            )
    return q


def _factor(u: float, q: int, which: str, lam) -> object:
    if which == "grover":
        return (1.0 + u * u) - 2.0 * u * lam
    return (1.0 + q * u * u) - (q + 1) * u * lam


def finite_torus_zeta_reciprocal(
    d: int, n: int, u: float, which: str = "grover", allow_high_dimension: bool = False
) -> float:
    """Generalized zeta reciprocal of the side-n torus from its closed-form spectrum.

    Computes (1 - u^2)^(d-1) * exp(mean over the n^d transition eigenvalues
    of log factor(lambda)) for the chosen kind. Raises ZetaDomainError
    outside the positivity domain.
    """
    _check_torus_params(d, n, allow_high_dimension)
    u = float(u)
    q = _check_domain(d, u, which)
    lams = _torus_values(d, n, "transition", allow_high_dimension)
    args = _factor(u, q, which, lams)
    mean_log = math.fsum(np.log(args)) / float(n**d)
    return torus_prefactor(d, u) * math.exp(mean_log)


def torus_limit_log_mean(
    d: int, u: float, which: str = "grover", grid: int = 64,
    allow_high_dimension: bool = False,
) -> float:
    """Quadrature value of the limit integral mean of log factor(lambda(theta)).

    lambda(theta) = (1/d) sum_j cos theta_j over [0, 2 pi]^d with the uniform
    product measure, integrated by the periodic trapezoid rule on a grid of
    `grid` points per axis. Periodicity makes the trapezoid rule a plain
    average over the grid, evaluated here one axis-0 slice at a time.
    """
    if d < 1:
        raise FamilyParameterError(f"torus dimension must be at least 1, got {d}")
    if not allow_high_dimension and d > DIMENSION_CAP:
        raise FamilyParameterError(
            f"torus dimension {d} exceeds the default cap of {DIMENSION_CAP}; "
            f"grid sizes grow as G^d, pass allow_high_dimension=True to override"
        )
    if grid < MIN_GRID:
        raise ValueError(f"grid must be at least {MIN_GRID}, got {grid}")
    u = float(u)
    q = _check_domain(d, u, which)
    cos_axis = np.cos(2.0 * np.pi * np.arange(grid) / grid)
    block_sums = []
    for head in itertools.product(range(grid), repeat=d - 1):
        partial = sum(cos_axis[i] for i in head)
        lams = (partial + cos_axis) / d
        block_sums.append(float(np.sum(np.log(_factor(u, q, which, lams)))))
    return math.fsum(block_sums) / float(grid**d)


def torus_limit_zeta_reciprocal(
    d: int, u: float, which: str = "grover", grid: int = 64,
    allow_high_dimension: bool = False,
) -> float:
    """Infinite-volume generalized zeta reciprocal of the d-dimensional torus.

    Assembles the prefactor (1 - u^2)^(d-1) with the exponential of the
    quadrature integral. On grid G this equals the side-G torus value,
    because the quadrature nodes reproduce its spectrum.
    """
    mean = torus_limit_log_mean(d, u, which, grid, allow_high_dimension)
    return torus_prefactor(d, u) * math.exp(mean)


@dataclass(frozen=True)
class ConvergenceRow:
    n: int
    value: float
    abs_error: float


@dataclass(frozen=True)
class ConvergenceStudy:
    """Finite torus values against a fine-grid reference as the side grows."""

    d: int
    u: float
    which: str
    reference_grid: int
    reference_value: float
    rows: tuple[ConvergenceRow, ...]

    def errors_monotone(self, slack: float = 1e-12) -> bool:
        """True when the absolute errors never increase by more than slack."""
        errs = [row.abs_error for row in self.rows]
        return all(b <= a + slack for a, b in zip(errs, errs[1:]))


def convergence_study(
    d: int,
    u: float,
    sides: Sequence[int],
    which: str = "grover",
    reference_grid: int | None = None,
    allow_high_dimension: bool = False,
) -> ConvergenceStudy:
    """Tabulate finite-torus values against a fine-grid limit reference.

    Sides must be strictly increasing. The reference grid must be at least
    four times the largest side (the default), so the reference is well
    past the tabulated resolutions.
    """
    sides = list(sides)
    if not sides:
        raise ValueError("at least one torus side is required")
    if any(b <= a for a, b in zip(sides, sides[1:])):
        raise ValueError(f"sides must be strictly increasing, got {sides}")
    if reference_grid is None:
        reference_grid = 4 * max(sides)
    if reference_grid < 4 * max(sides):
        raise ValueError(
            f"reference grid {reference_grid} must be at least four times "
            f"the largest side ({4 * max(sides)})"
        )
    reference = torus_limit_zeta_reciprocal(
        d, u, which, reference_grid, allow_high_dimension
    )
    rows = []
    for n in sides:
        value = finite_torus_zeta_reciprocal(d, n, u, which, allow_high_dimension)
        rows.append(ConvergenceRow(n=n, value=value, abs_error=abs(value - reference)))
    return ConvergenceStudy(
        d=d,
        u=float(u),
        which=which,
        reference_grid=reference_grid,
        reference_value=reference,
        rows=tuple(rows),
    )
