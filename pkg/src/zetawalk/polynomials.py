"""Exact univariate polynomials over big rationals.

Characteristic-style determinants det(I - u*M) are recovered exactly by
evaluating the determinant at the integer nodes u = 0, 1, ..., deg with
fraction-free elimination and interpolating. The nodes are exact, and with
exact arithmetic conditioning is irrelevant; integer nodes keep the cleared
matrices small.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Sequence

from .rational import RatMatrix, det_bareiss_int

import math


class Poly:
    """Univariate polynomial with exact rational coefficients.

    Coefficients are stored ascending by degree with trailing zeros trimmed;
    the zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence = ()):
        values = [Fraction(c) for c in coeffs]
        while values and not values[-1]:
            values.pop()
        self.coeffs = tuple(values)

    @classmethod
    def zero(cls) -> "Poly":
        return cls(())

    @classmethod
    def one(cls) -> "Poly":
        return cls((1,))

    @classmethod
    def variable(cls) -> "Poly":
        """The monomial u."""
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, value in enumerate(b):
            out[k] += value
        return Poly(out)

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other) -> "Poly":
        if isinstance(other, Poly):
            if not self.coeffs or not other.coeffs:
                return Poly.zero()
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if not a:
                    continue
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
            return Poly(out)
        return Poly([c * Fraction(other) for c in self.coeffs])

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Poly":
        if exponent < 0:
            raise ValueError("negative polynomial powers are not defined")
        result = Poly.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def eval_exact(self, u) -> Fraction:
        """Horner evaluation at a rational point."""
        u = Fraction(u)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * u + c
        return acc

    def eval_float(self, u: float) -> float:
        """Horner evaluation in double precision; no exactness claimed."""
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * u + float(c)
        return acc

    def derivative(self) -> "Poly":
        return Poly([k * c for k, c in enumerate(self.coeffs)][1:])

    def __repr__(self) -> str:
        if not self.coeffs:
            return "Poly(0)"
        terms = [f"{c}*u^{k}" if k else f"{c}" for k, c in enumerate(self.coeffs) if c]
        return "Poly(" + " + ".join(terms) + ")"


def one_minus_u_squared_pow(exponent: int) -> Poly:
    """(1 - u^2)^exponent expanded exactly."""
    return Poly((1, 0, -1)) ** exponent


def _cleared_integer_blocks(blocks: Sequence[RatMatrix]) -> tuple[list[list[list[int]]], int, int]:
    """Clear denominators jointly: returns integer blocks, the scalar, and n.

    All blocks are multiplied by the global lcm of entry denominators, so the
    evaluated matrix at integer nodes is integral and det scales by lcm**n.
    """
    n = blocks[0].rows
    lcm = 1
    for block in blocks:
        for _, _, value in block.nonzero_items():
            lcm = lcm * value.denominator // math.gcd(lcm, value.denominator)
    int_blocks = []
    for block in blocks:
        dense = [[0] * n for _ in range(n)]
        for i, j, value in block.nonzero_items():
            dense[i][j] = int(value * lcm)
        int_blocks.append(dense)
    return int_blocks, lcm, n


def _det_at_node(task: tuple[list[list[list[int]]], int]) -> int:
    int_blocks, t = task
    n = len(int_blocks[0])
    acc = [[0] * n for _ in range(n)]
    power = 1
    for block in int_blocks:
        if power == 1:
            for i in range(n):
                row_b = block[i]
                row_a = acc[i]
                for j in range(n):
                    row_a[j] += row_b[j]
        else:
            for i in range(n):
                row_b = block[i]
                row_a = acc[i]
                for j in range(n):
                    if row_b[j]:
                        row_a[j] += row_b[j] * power
        power *= t
    return det_bareiss_int(acc)


def det_matrix_polynomial(
    blocks: Sequence[RatMatrix], degree: int | None = None, workers: int = 1
) -> Poly:
    """Exact det(sum_k u^k * blocks[k]) by node evaluation and interpolation.

    ``degree`` bounds the result degree; defaults to n * (len(blocks) - 1).
    The node evaluations are independent; with ``workers`` > 1 they run in a
    process pool, collected in node order so the result is schedule-free.
    """
    n = blocks[0].rows
    for block in blocks:
        if block.rows != block.cols or block.rows != n:
            raise ValueError("all blocks must be square and same-dimensional")
    if degree is None:
        degree = n * (len(blocks) - 1)
    int_blocks, lcm, n = _cleared_integer_blocks(blocks)
    tasks = [(int_blocks, t) for t in range(degree + 1)]
    if workers > 1 and degree > 0:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            dets = list(pool.map(_det_at_node, tasks, chunksize=max(1, len(tasks) // (4 * workers))))
    else:
        dets = [_det_at_node(task) for task in tasks]
    scale = Fraction(1, lcm**n)
    values = [d * scale for d in dets]
    return _interpolate_at_integer_nodes(values)


def _interpolate_at_integer_nodes(values: Sequence[Fraction]) -> Poly:
    """Newton interpolation through (t, values[t]) for t = 0..len-1."""
    k = len(values)
    diffs = list(values)
    # divided differences over the unit-spaced nodes
    for order in range(1, k):
        for i in range(k - 1, order - 1, -1):
            diffs[i] = (diffs[i] - diffs[i - 1]) / order
    # expand Newton form: (((c_{k-1})(u - x_{k-2}) + c_{k-2}) ... )
    coeffs = [diffs[k - 1]]
    for i in range(k - 2, -1, -1):
        new = [Fraction(0)] * (len(coeffs) + 1)
        for j, c in enumerate(coeffs):
            new[j + 1] += c
            new[j] -= c * i
        new[0] += diffs[i]
        coeffs = new
    return Poly(coeffs)


def det_i_minus_u(matrix: RatMatrix, workers: int = 1) -> Poly:
    """Exact polynomial det(I - u*M) for a square rational matrix M."""
    if matrix.rows != matrix.cols:
        raise ValueError("det(I - u*M) requires a square matrix")
    n = matrix.rows
    blocks = [RatMatrix.identity(n), matrix * Fraction(-1)]
    return det_matrix_polynomial(blocks, degree=n, workers=workers)


def log_series(p: Poly, order: int) -> tuple[Fraction, ...]:
    """Coefficients c_1..c_order of log(1/p(u)) as a formal power series.

    Requires p(0) = 1. Uses log(1/p)' = -p'/p: the series inverse of p is
    computed by the standard convolution recurrence and multiplied by -p'.
    """
    if p[0] != 1:
        raise ValueError("log series requires constant term 1")
    if order < 0:
        raise ValueError("order must be non-negative")
    # inv[k] with p * inv = 1 (mod u^order)
    inv = [Fraction(1)] + [Fraction(0)] * (order - 1) if order else []
    for k in range(1, order):
        acc = Fraction(0)
        for i in range(1, min(k, p.degree) + 1):
            ci = p[i]
            if ci:
                acc += ci * inv[k - i]
        inv[k] = -acc
    dp = p.derivative()
    out = []
    for r in range(1, order + 1):
        # coefficient of u^(r-1) in -p' * inv
        acc = Fraction(0)
        for i in range(0, r):
            a = dp[i]
            if a:
                acc += a * inv[r - 1 - i]
        out.append(-acc / r)
    return tuple(out)
