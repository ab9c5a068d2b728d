"""Star products of plane-wave sums, and a DFT lattice oracle.

Plane waves are eigenfunctions of every derivative, so the star product
of n single waves is again a single wave: the output frequency is the
sum of the input frequencies and the coefficient picks up the
exponential of a kernel built from the deformation parameters.  Finite
wave sums follow by multilinearity.

The grid oracle realizes the same product on a periodic lattice: forward
DFT each factor, weight every frequency tuple with the same kernel, and
inverse transform.  For band-limited inputs the two engines agree to
float rounding, which is the cross-check the test suite leans on.
"""

from __future__ import annotations

import cmath
import itertools
import json
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .starcore import ThetaConfig, sigma_power

MERGE_TOL = 1e-12

# i^(n+1) without float drift
_I_POW = (1 + 0j, 1j, -1 + 0j, -1j)


class WorkBudgetError(RuntimeError):
    """Raised when a lattice product would exceed the configured work budget."""


def freq_cross(q: Sequence[float], r: Sequence[float]) -> tuple:
    """Antisymmetric frequency combination for dimension 3.

    Component j is q_{s(j)} r_{s2(j)} - q_{s2(j)} r_{s(j)}, which is the
    ordinary cross product q x r.  Exact when the inputs are ints.
    """
    if len(q) != 3 or len(r) != 3:
        raise ValueError("defined for dimension 3 only")
    out = []
    for j in range(1, 4):
        s1, s2 = sigma_power(j, 1, 3) - 1, sigma_power(j, 2, 3) - 1
        out.append(q[s1] * r[s2] - q[s2] * r[s1])
    return tuple(out)


def triple_product_identity_check(p: Sequence[float], q: Sequence[float],
                                  r: Sequence[float], tol: float = 1e-12) -> bool:
    """True iff p.(q x r) == r.(p x q) == q.(r x p), each equal to det[p|q|r]."""
    a = sum(pi * wi for pi, wi in zip(p, freq_cross(q, r)))
    b = sum(ri * wi for ri, wi in zip(r, freq_cross(p, q)))
    c = sum(qi * wi for qi, wi in zip(q, freq_cross(r, p)))
    return abs(a - b) <= tol and abs(b - c) <= tol


def kernel_exponent(freqs: Sequence[Sequence[float]], cfg: ThetaConfig) -> complex:
    """Exponent acquired by a star product of n single plane waves.

    exponent = (i^(n+1)/2) * sum_k theta_k * (forward product - reverse
    product) of the slot frequencies routed through the cyclic
    permutation.  Purely real for n = 3, purely imaginary for n = 4.
    """
    n = cfg.n
    if len(freqs) != n:
        raise ValueError(f"expected {n} frequency vectors, got {len(freqs)}")
    for s in freqs:
        if len(s) != n:
            raise ValueError("frequency vector dimension mismatch")
    total = 0.0
    for k in range(1, n + 1):
        th = float(cfg.theta[k - 1])
        if th == 0.0:
            continue
        fwd = 1.0
        for j in range(1, n + 1):
            fwd *= freqs[j - 1][sigma_power(k, j - 1, n) - 1]
        rev = freqs[0][k - 1]
        for j in range(2, n + 1):
            rev *= freqs[j - 1][sigma_power(k, n - j + 1, n) - 1]
        total += th * (fwd - rev)
    return _I_POW[(n + 1) % 4] * (total / 2.0)


@dataclass(frozen=True)
class GridSpec:
    """Periodic lattice: N points per axis on [0, L)^n."""

    n: int
    points_per_axis: int
    period: float

    def __post_init__(self):
        if self.n < 3:
            raise ValueError("dimension must be at least 3")
        if self.points_per_axis < 1:
            raise ValueError("points_per_axis must be positive")
        if self.period <= 0:
            raise ValueError("period must be positive")

    @property
    def base_freq(self) -> float:
        return 2.0 * math.pi / self.period

    def axis_points(self) -> np.ndarray:
        N = self.points_per_axis
        return np.arange(N) * (self.period / N)

    def int_freqs(self) -> np.ndarray:
        """Integer frequency indices in FFT order (0..N/2-1, -N/2..-1)."""
        N = self.points_per_axis
        return np.rint(np.fft.fftfreq(N) * N).astype(int)


class WaveSum:
    """Finite sum of plane waves sum_a c_a exp(i s_a . x), canonicalized so
    no two stored frequencies coincide (within MERGE_TOL per component)."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Sequence[tuple[complex, Sequence[float]]] = ()):
        merged: dict[tuple[int, ...], list] = {}
        for coeff, freq in terms:
            freq = tuple(float(v) for v in freq)
            if len(freq) != n:
                raise ValueError("frequency dimension mismatch")
            key = tuple(int(round(v / MERGE_TOL)) for v in freq)
            slot = merged.get(key)
            if slot is None:
                merged[key] = [complex(coeff), freq]
            else:
                slot[0] += complex(coeff)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "terms", tuple(
            (c, f) for c, f in (merged[k] for k in sorted(merged)) if c != 0))

    def __setattr__(self, name, value):
        raise AttributeError("WaveSum is immutable")

    @staticmethod
    def single(coeff: complex, freq: Sequence[float]) -> "WaveSum":
        return WaveSum(len(freq), [(coeff, freq)])

    @staticmethod
    def constant(coeff: complex, n: int) -> "WaveSum":
        return WaveSum(n, [(coeff, (0.0,) * n)])

    def __eq__(self, other) -> bool:
        if not isinstance(other, WaveSum):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __add__(self, other: "WaveSum") -> "WaveSum":
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        return WaveSum(self.n, list(self.terms) + list(other.terms))

    def scale(self, c: complex) -> "WaveSum":
        return WaveSum(self.n, [(coeff * c, f) for coeff, f in self.terms])

    def __mul__(self, other: "WaveSum") -> "WaveSum":
        """Pointwise product (frequencies add); the theta = 0 star product."""
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        out = []
        for c1, f1 in self.terms:
            for c2, f2 in other.terms:
                out.append((c1 * c2, tuple(a + b for a, b in zip(f1, f2))))
        return WaveSum(self.n, out)

    def eval_at(self, point: Sequence[float]) -> complex:
        return sum(c * cmath.exp(1j * sum(fi * xi for fi, xi in zip(f, point)))
                   for c, f in self.terms)

    def sample_on_grid(self, spec: GridSpec) -> np.ndarray:
        if spec.n != self.n:
            raise ValueError("dimension mismatch")
        axes = spec.axis_points()
        grids = np.meshgrid(*([axes] * self.n), indexing="ij")
        out = np.zeros((spec.points_per_axis,) * self.n, dtype=complex)
        for c, f in self.terms:
            phase = sum(fi * g for fi, g in zip(f, grids))
            out += c * np.exp(1j * phase)
        return out

    def to_json(self) -> str:
        return json.dumps({
            "n": self.n,
            "terms": [{"re": c.real, "im": c.imag, "freq": list(f)} for c, f in self.terms],
        })

    @staticmethod
    def from_json(text: str) -> "WaveSum":
        data = json.loads(text)
        return WaveSum(data["n"], [(complex(t["re"], t["im"]), t["freq"]) for t in data["terms"]])

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({c!r})*exp(i[{', '.join(repr(v) for v in f)}].x)"
                          for c, f in self.terms)

    def __repr__(self) -> str:
        body = " + ".join(f"({c:.6g})e^(i{list(f)}.x)" for c, f in self.terms) or "0"
        return f"<WaveSum n={self.n} {body}>"


def star_waves(factors: Sequence[WaveSum], cfg: ThetaConfig) -> WaveSum:
    """n-ary star product of finite wave sums, by multilinearity."""
    n = cfg.n
    if len(factors) != n:
        raise ValueError(f"expected {n} factors, got {len(factors)}")
    for w in factors:
        if w.n != n:
            raise ValueError("factor dimension mismatch")
    out = []
    for combo in itertools.product(*(w.terms for w in factors)):
        coeff = 1.0 + 0j
        for c, _ in combo:
            coeff *= c
        freqs = [f for _, f in combo]
        coeff *= cmath.exp(kernel_exponent(freqs, cfg))
        out.append((coeff, tuple(sum(v) for v in zip(*freqs))))
    return WaveSum(n, out)


def grid_oracle_star(factors: Sequence[np.ndarray], spec: GridSpec, cfg: ThetaConfig,
                     budget: float = 1e8, occupancy_cutoff: float = 1e-12) -> np.ndarray:
    """Lattice-sample star product via the discrete Fourier representation.

    Each factor is an N^n array of samples of a band-limited periodic
    function on [0, L)^n.  The factors are analyzed into discrete
    frequencies, every occupied frequency tuple is weighted with
    exp(kernel_exponent), and the weighted sum is synthesized back to
    position samples.
    """
    n, N = spec.n, spec.points_per_axis
    if len(factors) != n:
        raise ValueError(f"expected {n} factors, got {len(factors)}")
    shape = (N,) * n
    specs = []
    for arr in factors:
        arr = np.asarray(arr, dtype=complex)
        if arr.shape != shape:
            raise ValueError(f"factor shape {arr.shape} does not match grid {shape}")
        specs.append(np.fft.fftn(arr) / N**n)

    ints = spec.int_freqs()
    base = spec.base_freq
    occupied = []
    for F in specs:
        cutoff = occupancy_cutoff * max(1.0, float(np.abs(F).max()))
        idx = np.argwhere(np.abs(F) > cutoff)
        occupied.append([tuple(ix) for ix in idx])

    max_occ = max((len(o) for o in occupied), default=0)
    cost = float(N**n) * float(max_occ) ** (n - 1)
    if cost > budget:
        raise WorkBudgetError(
            f"lattice star cost {cost:.3g} exceeds budget {budget:.3g}")

    out_spec = np.zeros(shape, dtype=complex)
    for combo in itertools.product(*occupied):
        coeff = 1.0 + 0j
        for F, ix in zip(specs, combo):
            coeff *= F[ix]
        freqs = [tuple(base * ints[i] for i in ix) for ix in combo]
        coeff *= cmath.exp(kernel_exponent(freqs, cfg))
        target = tuple((sum(ix[d] for ix in combo)) % N for d in range(n))
        out_spec[target] += coeff
    return np.fft.ifftn(out_spec) * N**n


def save_lattice(path: str, arr: np.ndarray, spec: GridSpec) -> None:
    """Row-major complex-pair binary with a one-line JSON header {n, N, L}."""
    arr = np.ascontiguousarray(np.asarray(arr, dtype=np.complex128))
    header = json.dumps({"n": spec.n, "N": spec.points_per_axis, "L": spec.period})
    with open(path, "wb") as fh:
        fh.write(header.encode("utf-8") + b"\n")
        fh.write(arr.tobytes())


def load_lattice(path: str) -> tuple[np.ndarray, GridSpec]:
    with open(path, "rb") as fh:
        header = fh.readline()
        meta = json.loads(header.decode("utf-8"))
        spec = GridSpec(meta["n"], meta["N"], meta["L"])
        data = np.frombuffer(fh.read(), dtype=np.complex128)
    shape = (spec.points_per_axis,) * spec.n
    return data.reshape(shape).copy(), spec
