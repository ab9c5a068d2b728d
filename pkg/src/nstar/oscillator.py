"""Coupled-oscillator application: Hamiltonian construction, closed-form
eigenvalues, Hermite ground states, and residual reports for the
star-product eigenvalue equations in the Gaussian-weighted class.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .closedforms import complex_pair
from .polynomials import Polynomial, x
from .scalars import ExactComplex
from .starcore import ThetaConfig, deformation_terms, _compositions

RationalLike = int | Fraction


@dataclass(frozen=True)
class QuantumNumber:
    """Vector of occupation numbers; the closed-form energies depend on it
    only through the norm |nbar|."""

    nbar: tuple[int, ...]

    def __post_init__(self):
        if any(v < 0 for v in self.nbar):
            raise ValueError("occupation numbers must be non-negative")
        object.__setattr__(self, "nbar", tuple(int(v) for v in self.nbar))

    @property
    def norm(self) -> int:
        return sum(self.nbar)


@dataclass(frozen=True)
class HamiltonianSpec:
    """Couplings of the oscillator model.

    Either the coupled form (quadratic base plus pair/quadruple couplings
    over strictly increasing index tuples) or the already-diagonal form
    (rows of coefficients for x_i^2, x_i^4, ...) is active; mixing the
    two is rejected.  The antisymmetric index symbol is fixed to +1 on
    the strictly increasing tuples the sums run over.
    """

    n: int
    lambda_pair: Mapping[tuple[int, int], Fraction] = field(default_factory=dict)
    lambda_quad: Mapping[tuple[int, int, int, int], Fraction] = field(default_factory=dict)
    diag_lambdas: tuple[tuple[Fraction, ...], ...] | None = None

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("dimension must be positive")
        pair = {}
        for key, val in dict(self.lambda_pair).items():
            i, j = key
            if not (1 <= i < j <= self.n):
                raise ValueError(f"pair coupling index {key} out of range or not increasing")
            pair[(i, j)] = Fraction(val)
        quad = {}
        for key, val in dict(self.lambda_quad).items():
            i, j, k, l = key
            if not (1 <= i < j < k < l <= self.n):
                raise ValueError(f"quadruple coupling index {key} out of range or not increasing")
            quad[(i, j, k, l)] = Fraction(val)
        diag = None
        if self.diag_lambdas is not None:
            if pair or quad:
                raise ValueError("diagonal coefficients exclude pair/quadruple couplings")
            diag = tuple(tuple(Fraction(v) for v in row) for row in self.diag_lambdas)
            for row in diag:
                if len(row) != self.n:
                    raise ValueError("each diagonal coefficient row must have length n")
        object.__setattr__(self, "lambda_pair", pair)
        object.__setattr__(self, "lambda_quad", quad)
        object.__setattr__(self, "diag_lambdas", diag)

    @property
    def levi_civita_rank(self) -> int:
        return self.n if self.n % 2 == 0 else self.n - 1


def build_hamiltonian(spec: HamiltonianSpec) -> Polynomial:
    """Exact Hamiltonian polynomial for the given couplings."""
    n = spec.n
    if spec.diag_lambdas is not None:
        H = Polynomial.zero(n)
        for r, row in enumerate(spec.diag_lambdas):
            power = 2 * (r + 1)
            for i, lam in enumerate(row):
                if lam:
                    H = H + x(i + 1, n) ** power * ExactComplex(lam)
        return H
    H = Polynomial.zero(n)
    for j in range(1, n + 1):
        H = H + x(j, n) * x(j, n)
    for (i, j), lam in sorted(spec.lambda_pair.items()):
        if lam:
            H = H + x(i, n) * x(j, n) * ExactComplex(lam)
    for (i, j, k, l), lam in sorted(spec.lambda_quad.items()):
        if lam:
            H = H + x(i, n) * x(j, n) * x(k, n) * x(l, n) * ExactComplex(lam)
    return H


def energy(k: int, nbar: QuantumNumber, cfg: ThetaConfig, spec: HamiltonianSpec) -> Fraction:
    """Closed-form eigenvalue, exact in rationals.

    E = theta_k * ( n/2 + lam0_k * |nbar|
                    + sum_{m>=1} (prod of the first m anharmonic row sums) * |nbar|^(m+1) )

    truncated at the number of supplied diagonal coefficient rows.
    """
    n = cfg.n
    if not 1 <= k <= n:
        raise ValueError(f"index {k} out of range 1..{n}")
    if spec.n != n:
        raise ValueError("spec dimension mismatch")
    N = nbar.norm
    total = Fraction(n, 2)
    rows = spec.diag_lambdas or ()
    if rows:
        total += rows[0][k - 1] * N
        prod = Fraction(1)
        for m in range(1, len(rows)):
            prod *= sum(rows[m], Fraction(0))
            total += prod * Fraction(N) ** (m + 1)
    return cfg.theta[k - 1] * total


def hermite_coeffs(k: int) -> list[int]:
    """Coefficients (ascending) of the physicists' Hermite polynomial H_k."""
    if k < 0:
        raise ValueError("index must be non-negative")
    prev, cur = [1], [0, 2]
    if k == 0:
        return prev
    for m in range(1, k):
        # H_{m+1}(u) = 2u H_m(u) - 2m H_{m-1}(u)
        nxt = [0] + [2 * c for c in cur]
        for i, c in enumerate(prev):
            nxt[i] -= 2 * m * c
        prev, cur = cur, nxt
    return cur


@dataclass(frozen=True)
class PolyGauss:
    """polynomial * exp(-scale * |x|^2 / 2); closed under differentiation.

    Products add the scales, so an n-fold pointwise product of unit-scale
    elements has scale n.  Plain polynomials embed with scale 0.
    """

    poly: Polynomial
    scale: int = 1

    def __post_init__(self):
        if self.scale < 0:
            raise ValueError("scale must be non-negative")

    @property
    def n(self) -> int:
        return self.poly.n

    def diff(self, axis: int) -> "PolyGauss":
        # d_a (p w^s) = (d_a p - s x_a p) w^s
        reduced = self.poly.diff(axis)
        if self.scale:
            reduced = reduced - x(axis, self.poly.n) * self.poly * self.scale
        return PolyGauss(reduced, self.scale)

    def __mul__(self, other: "PolyGauss") -> "PolyGauss":
        return PolyGauss(self.poly * other.poly, self.scale + other.scale)

    def __add__(self, other: "PolyGauss") -> "PolyGauss":
        if self.scale != other.scale:
            raise ValueError("cannot add Gaussian-weighted values of different scale")
        return PolyGauss(self.poly + other.poly, self.scale)

    def eval(self, point: Sequence) -> complex:
        if all(isinstance(v, (int, Fraction)) for v in point):
            sumsq = sum(Fraction(v) * Fraction(v) for v in point)
            value = self.poly.eval_exact(point).to_complex()
            return value * math.exp(-float(Fraction(self.scale) * sumsq / 2))
        pt = [float(v) for v in point]
        sumsq = sum(v * v for v in pt)
        return self.poly.eval_complex(pt) * math.exp(-self.scale * sumsq / 2.0)


def ground_state(k: int, n: int) -> PolyGauss:
    """Gaussian-weighted radial Hermite state: H_k(|x|^2/2) * exp(-|x|^2/2)."""
    if k < 0:
        raise ValueError("index must be non-negative")
    radial = Polynomial.zero(n)
    for i in range(1, n + 1):
        radial = radial + x(i, n) * x(i, n)
    u = radial * Fraction(1, 2)
    coeffs = hermite_coeffs(k)
    poly = Polynomial.zero(n)
    upow = Polynomial.constant(1, n)
    for c in coeffs:
        if c:
            poly = poly + upow * c
        upow = upow * u
    return PolyGauss(poly, 1)


def star_increments(factors: Sequence[PolyGauss], cfg: ThetaConfig,
                    order: int) -> list[Polynomial]:
    """Per-order increments of the star series in the Gaussian class.

    Increment m is (1/m!) times the m-fold operator application,
    multiplied out; the full product truncated at order M is the sum of
    increments 0..M (at the combined Gaussian scale).
    """
    if order < 0:
        raise ValueError("order must be non-negative")
    n = cfg.n
    if len(factors) != n:
        raise ValueError(f"expected {n} factors, got {len(factors)}")
    terms = deformation_terms(cfg)

    diff_cache: list[dict[tuple[int, ...], PolyGauss]] = [{(0,) * n: f} for f in factors]

    def diffed(slot: int, counts: tuple[int, ...]) -> PolyGauss:
        cache = diff_cache[slot]
        got = cache.get(counts)
        if got is not None:
            return got
        ax = next(i for i, c in enumerate(counts) if c)
        prev = counts[:ax] + (counts[ax] - 1,) + counts[ax + 1:]
        val = diffed(slot, prev).diff(ax + 1)
        cache[counts] = val
        return val

    increments: list[Polynomial] = []
    T = len(terms)
    for m in range(order + 1):
        increment = Polynomial.zero(n)
        if m == 0:
            increment = factors[0].poly
            for f in factors[1:]:
                increment = increment * f.poly
        elif T:
            for comp in _compositions(m, T):
                coeff = ExactComplex(1)
                for t, c in enumerate(comp):
                    if c:
                        coeff = coeff * terms[t].weight**c
                        coeff = coeff * Fraction(1, math.factorial(c))
                prod = None
                for j in range(n):
                    counts = [0] * n
                    for t, c in enumerate(comp):
                        if c:
                            counts[terms[t].slot_axes[j] - 1] += c
                    pj = diffed(j, tuple(counts)).poly
                    if pj.is_zero():
                        prod = None
                        break
                    prod = pj if prod is None else prod * pj
                if prod is not None:
                    increment = increment + prod * coeff
        increments.append(increment)
    return increments


def star_polygauss_truncated(factors: Sequence[PolyGauss], cfg: ThetaConfig,
                             order: int) -> tuple[PolyGauss, float]:
    """Order-truncated star product in the Gaussian-weighted class.

    Unlike the polynomial case the exponential series does not
    terminate, so the sum runs to the requested order.  Returns the
    truncated result together with the largest coefficient magnitude of
    the final increment, a cheap convergence indicator.
    """
    increments = star_increments(factors, cfg, order)
    total_scale = sum(f.scale for f in factors)
    result = increments[0]
    for inc in increments[1:]:
        result = result + inc
    return PolyGauss(result, total_scale), increments[-1].max_coeff_magnitude()


def residual_report(spec: HamiltonianSpec, cfg: ThetaConfig, k: int, order: int,
                    sample_points: Sequence[Sequence], complex_axes: tuple[int, int] = (1, 2)) -> dict:
    """Residual magnitudes, per truncation order and sample point, of

    (a) the ground-state annihilation equation: the star product of a
        complex coordinate with n-1 copies of the state, and
    (b) the eigenvalue equation: star{H, state, ...} - E * star{1, state, ...}.

    This is a report, not an assertion: the table records how the
    residuals behave as the truncation order grows.
    """
    n = cfg.n
    if spec.n != n:
        raise ValueError("spec dimension mismatch")
    if order < 0:
        raise ValueError("order must be non-negative")
    points = [tuple(p) for p in sample_points]
    for p in points:
        if len(p) != n:
            raise ValueError("sample point dimension mismatch")
        if sum(float(v) ** 2 for v in p) > 16.0 + 1e-9:
            raise ValueError("sample points must satisfy |x| <= 4")

    psi = ground_state(k, n)
    a_poly, _ = complex_pair(complex_axes[0], complex_axes[1], n)
    H = build_hamiltonian(spec)
    E = energy(1, QuantumNumber((k,) + (0,) * (n - 1)), cfg, spec)
    Ec = float(E)

    def cumulative_values(lead: PolyGauss) -> list[list[complex]]:
        factors = [lead] + [psi] * (n - 1)
        scale = sum(f.scale for f in factors)
        rows = []
        running = Polynomial.zero(n)
        for increment in star_increments(factors, cfg, order):
            running = running + increment
            rows.append([PolyGauss(running, scale).eval(p) for p in points])
        return rows

    ann_vals = cumulative_values(PolyGauss(a_poly, 0))
    ham_vals = cumulative_values(PolyGauss(H, 0))
    one_vals = cumulative_values(PolyGauss(Polynomial.constant(1, n), 0))

    rows = []
    ground_table = []
    eigen_table = []
    for m in range(order + 1):
        ga = [abs(v) for v in ann_vals[m]]
        gb = [abs(h - Ec * o) for h, o in zip(ham_vals[m], one_vals[m])]
        ground_table.append(ga)
        eigen_table.append(gb)
        rows.append({
            "order": m,
            "ground_max": max(ga),
            "ground_mean": sum(ga) / len(ga),
            "eigen_max": max(gb),
            "eigen_mean": sum(gb) / len(gb),
        })
    return {
        "n": n,
        "k": k,
        "order": order,
        "num_points": len(points),
        "complex_axes": list(complex_axes),
        "energy": f"{E.numerator}/{E.denominator}",
        "points": [[float(v) for v in p] for p in points],
        "ground_residuals": ground_table,
        "eigen_residuals": eigen_table,
        "rows": rows,
    }
