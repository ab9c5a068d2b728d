"""The n-ary star product on exact polynomials.

The product multiplies n factors at once: apply the exponential of a
derivation operator to the tensor product of the factors, then multiply
the slots pointwise.  The derivation operator is a sum of 2n tensor
terms, two per deformation parameter theta_k: a "forward" term that
routes derivative axes through successive powers of the cyclic
permutation, and a "reverse" term that routes them through the inverse
order.  Each term differentiates every slot exactly once, so on
polynomials the exponential series terminates at the smallest factor
degree.

Two independent evaluation paths are provided:

* ``star_n``          multinomial expansion over term multisets (fast path)
* ``star_n_stepwise`` literal repeated application of the operator,
                      dividing by m! (naive oracle used to cross-check)
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .polynomials import Polynomial
from .scalars import ExactComplex

RationalLike = int | Fraction


@dataclass(frozen=True)
class ThetaConfig:
    """Dimension n plus the deformation parameters (theta_1..theta_n)."""

    n: int
    theta: tuple[Fraction, ...]

    def __post_init__(self):
        if self.n < 3:
            raise ValueError("dimension must be at least 3; the cyclic construction degenerates below 3")
        theta = tuple(Fraction(t) for t in self.theta)
        if len(theta) != self.n:
            raise ValueError(f"expected {self.n} deformation parameters, got {len(theta)}")
        object.__setattr__(self, "theta", theta)

    def negate(self) -> "ThetaConfig":
        return ThetaConfig(self.n, tuple(-t for t in self.theta))

    @staticmethod
    def uniform(n: int, value: RationalLike = 1) -> "ThetaConfig":
        return ThetaConfig(n, (Fraction(value),) * n)


def sigma_power(k: int, p: int, n: int) -> int:
    """p-th power of the cyclic permutation 1 -> 2 -> ... -> n -> 1 applied to k."""
    if not 1 <= k <= n:
        raise ValueError(f"index {k} out of range 1..{n}")
    return (k - 1 + p) % n + 1


@dataclass(frozen=True)
class CyclicPerm:
    """Order-n cycle; thin wrapper over sigma_power for callers that want an object."""

    n: int

    def apply(self, k: int, p: int = 1) -> int:
        return sigma_power(k, p, self.n)


@dataclass(frozen=True)
class TensorTerm:
    """One weighted summand of the derivation operator.

    slot_axes[j] is the coordinate axis differentiated in tensor slot j+1;
    every slot carries exactly one first-order derivative.
    """

    slot_axes: tuple[int, ...]
    weight: ExactComplex


def deformation_terms(cfg: ThetaConfig) -> list[TensorTerm]:
    """The 2n weighted tensor terms of the derivation operator.

    Forward term for index k puts the axis sigma^(j-1)(k) in slot j with
    weight +i*theta_k/2; the reverse term puts k in slot 1 and
    sigma^(n-j+1)(k) in slot j >= 2 with weight -i*theta_k/2.  Terms with
    theta_k = 0 are omitted.
    """
    n = cfg.n
    terms: list[TensorTerm] = []
    for k in range(1, n + 1):
        th = cfg.theta[k - 1]
        if th == 0:
            continue
        w = ExactComplex(0, Fraction(th, 2))
        fwd = tuple(sigma_power(k, j - 1, n) for j in range(1, n + 1))
        rev = (k,) + tuple(sigma_power(k, n - j + 1, n) for j in range(2, n + 1))
        terms.append(TensorTerm(fwd, w))
        terms.append(TensorTerm(rev, -w))
    return terms


def _check_arity(factors: Sequence[Polynomial], cfg: ThetaConfig) -> None:
    if len(factors) != cfg.n:
        raise ValueError(f"expected {cfg.n} factors, got {len(factors)}")
    for f in factors:
        if f.n != cfg.n:
            raise ValueError("factor dimension does not match configuration")


def _series_bound(factors: Sequence[Polynomial]) -> int:
    degs = [f.degree() for f in factors]
    if any(d < 0 for d in degs):
        return -1  # some factor is identically zero
    return min(degs)


def _star_from_terms(factors: Sequence[Polynomial], terms: list[TensorTerm],
                     n: int, bound: int) -> Polynomial:
    """Multinomial expansion of m[exp(sum of terms) applied to the factors].

    exp(sum_t T_t) = sum over multisets (m_1..m_T) of prod_t T_t^{m_t}/m_t!
    because the tensor terms commute (they are built from partial
    derivatives).  Slot derivatives are memoized per factor on the vector
    of per-axis derivative counts.
    """
    result = Polynomial.zero(n)
    if bound < 0:
        return result
    if not terms:
        prod = factors[0]
        for f in factors[1:]:
            prod = prod * f
        return prod

    ndiff_cache: list[dict[tuple[int, ...], Polynomial]] = [
        {(0,) * n: f} for f in factors
    ]

    def diffed(slot: int, counts: tuple[int, ...]) -> Polynomial:
        cache = ndiff_cache[slot]
        got = cache.get(counts)
        if got is not None:
            return got
        # peel one derivative off the first nonzero axis
        ax = next(i for i, c in enumerate(counts) if c)
        prev = counts[:ax] + (counts[ax] - 1,) + counts[ax + 1:]
        val = diffed(slot, prev).diff(ax + 1)
        cache[counts] = val
        return val

    T = len(terms)
    for m in range(bound + 1):
        for comp in _compositions(m, T):
            coeff = ExactComplex(1)
            for t, c in enumerate(comp):
                if c:
                    coeff = coeff * terms[t].weight**c
                    coeff = coeff * Fraction(1, math.factorial(c))
            slot_polys = []
            dead = False
            for j in range(n):
                counts = [0] * n
                for t, c in enumerate(comp):
                    if c:
                        counts[terms[t].slot_axes[j] - 1] += c
                pj = diffed(j, tuple(counts))
                if pj.is_zero():
                    dead = True
                    break
                slot_polys.append(pj)
            if dead:
                continue
            prod = slot_polys[0]
            for pj in slot_polys[1:]:
                prod = prod * pj
            result = result + prod * coeff
    return result


def _compositions(m: int, parts: int):
    """All tuples of `parts` non-negative integers summing to m."""
    if parts == 1:
        yield (m,)
        return
    for first in range(m + 1):
        for rest in _compositions(m - first, parts - 1):
            yield (first,) + rest


def star_n(factors: Sequence[Polynomial], cfg: ThetaConfig) -> Polynomial:
    """Exact n-ary star product of the factors."""
    _check_arity(factors, cfg)
    return _star_from_terms(factors, deformation_terms(cfg), cfg.n, _series_bound(factors))


def conjugate_star_n(factors: Sequence[Polynomial], cfg: ThetaConfig) -> Polynomial:
    """The conjugate product m[exp(-operator) applied to the factors].

    The operator is linear in theta, so this coincides with star_n at
    negated theta; it is computed here from the negated tensor terms so
    the two routes stay independent enough to cross-check.
    """
    _check_arity(factors, cfg)
    terms = [TensorTerm(t.slot_axes, -t.weight) for t in deformation_terms(cfg)]
    return _star_from_terms(factors, terms, cfg.n, _series_bound(factors))


def star_bracket(f: Polynomial, h: Polynomial, g, cfg: ThetaConfig) -> Polynomial:
    """Antisymmetrized product: bracket f and h in the outer slots with the
    middle factors g held fixed.

    For n = 3, g is a single polynomial and this is
    star_n(f, g, h) - star_n(h, g, f).  For n > 3 pass a sequence of n-2
    middle factors.
    """
    mids = (g,) if isinstance(g, Polynomial) else tuple(g)
    if len(mids) != cfg.n - 2:
        raise ValueError(f"expected {cfg.n - 2} middle factors, got {len(mids)}")
    return star_n((f, *mids, h), cfg) - star_n((h, *mids, f), cfg)


def star_n_stepwise(factors: Sequence[Polynomial], cfg: ThetaConfig,
                    terms: list[TensorTerm] | None = None) -> Polynomial:
    """Independent oracle: apply the derivation operator literally, m times,
    divide by m!, and sum.  Slower than star_n; kept deliberately naive."""
    _check_arity(factors, cfg)
    if terms is None:
        terms = deformation_terms(cfg)
    n = cfg.n
    bound = _series_bound(factors)
    result = Polynomial.zero(n)
    if bound < 0:
        return result

    def multiply_out(states):
        total = Polynomial.zero(n)
        for coeff, slots in states:
            prod = slots[0]
            for p in slots[1:]:
                prod = prod * p
            total = total + prod * coeff
        return total

    states: list[tuple[ExactComplex, tuple[Polynomial, ...]]] = [(ExactComplex(1), tuple(factors))]
    result = result + multiply_out(states)
    for m in range(1, bound + 1):
        new_states = []
        for coeff, slots in states:
            for term in terms:
                new_slots = []
                dead = False
                for j, p in enumerate(slots):
                    dp = p.diff(term.slot_axes[j])
                    if dp.is_zero():
                        dead = True
                        break
                    new_slots.append(dp)
                if not dead:
                    new_states.append((coeff * term.weight, tuple(new_slots)))
        states = new_states
        if not states:
            break
        result = result + multiply_out(states) * Fraction(1, math.factorial(m))
    return result
