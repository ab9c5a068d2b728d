"""Seeded randomized auditor for the algebraic identities of the n-ary
star product.

Every identity gets a claim id and an evaluator that computes both sides
on sampled inputs.  Identities that are theorems of the product
definition (multilinearity, antisymmetry, the conjugation law, the
coordinate closed forms, the frequency-cross identities) are "guaranteed":
a fails verdict there is a build-breaking defect.  Identities that are
asserted but do not follow mechanically (associativity, both Jacobi
forms, the complex-coordinate closed forms) are audited and reported,
whichever way they come out.

Failures carry a shrunk counterexample that is re-checked against the
naive term-by-term operator oracle before being reported, so a stored
counterexample never depends on the fast expansion engine alone.
"""

from __future__ import annotations

import json
import random
import zlib
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Callable, Sequence

from .closedforms import (
    COMPLEX_FORM_VARIANTS,
    TWO_COORD_VARIANTS,
    complex_pair,
    star_complex_form,
    star_coord_first,
    star_coord_last,
    star_coord_middle,
    star_coord_slot,
    star_two_coords,
    SlotSpec,
)
from .polynomials import Polynomial, x
from .scalars import ExactComplex
from .starcore import ThetaConfig, conjugate_star_n, sigma_power, star_n, star_n_stepwise
from .waves import freq_cross

THETA_CHOICES = (Fraction(0), Fraction(1, 2), Fraction(-1, 2),
                 Fraction(1), Fraction(-1), Fraction(2), Fraction(-2))

VERDICT_HOLDS = "holds-exact"
VERDICT_TOL = "holds-within-tol"
VERDICT_FAILS = "fails"


class UnknownClaimError(ValueError):
    pass


@dataclass(frozen=True)
class CorpusSpec:
    """Bounds for the sampled inputs of one claim."""

    dims: tuple[int, ...] = (3,)
    max_degree: int = 4
    coeff_bound: int = 3
    num_terms_choices: tuple[int, ...] = (1, 3)
    theta_choices: tuple[Fraction, ...] = THETA_CHOICES
    real_coefficients: bool = False

    def describe(self) -> str:
        kinds = "real" if self.real_coefficients else "complex"
        return (f"n in {list(self.dims)}; monomials and {max(self.num_terms_choices)}-term "
                f"polynomials of degree <= {self.max_degree}; {kinds} integer coefficients "
                f"in [-{self.coeff_bound}, {self.coeff_bound}]; "
                f"theta components in {{0, +-1/2, +-1, +-2}}")


INT_VECTOR_CORPUS = CorpusSpec(dims=(3,), max_degree=0, coeff_bound=9)


@dataclass(frozen=True)
class ClaimInputs:
    n: int
    theta: tuple[Fraction, ...]
    polys: tuple[Polynomial, ...]
    meta: dict = field(default_factory=dict)

    def cfg(self) -> ThetaConfig:
        return ThetaConfig(self.n, self.theta)


@dataclass
class ClaimReport:
    claim: str
    verdict: str
    trials: int
    seed: int
    corpus: str
    counterexample: dict | None = None
    witness: dict | None = None

    def to_dict(self) -> dict:
        return {
            "claim": self.claim,
            "verdict": self.verdict,
            "trials": self.trials,
            "seed": self.seed,
            "corpus": self.corpus,
            "counterexample": self.counterexample,
            "witness": self.witness,
        }


# --------------------------------------------------------------------------
# sampling

def _claim_rng(seed: int, claim: str) -> random.Random:
    return random.Random(zlib.crc32(f"{seed}:{claim}".encode("utf-8")))


def sample_theta(rng: random.Random, n: int, choices=THETA_CHOICES,
                 require_nonzero: bool = False) -> tuple[Fraction, ...]:
    while True:
        theta = tuple(rng.choice(choices) for _ in range(n))
        if not require_nonzero or any(theta):
            return theta


def sample_poly(rng: random.Random, n: int, corpus: CorpusSpec) -> Polynomial:
    nterms = rng.choice(corpus.num_terms_choices)
    terms: dict[tuple[int, ...], ExactComplex] = {}
    for _ in range(nterms):
        degree = rng.randint(0, corpus.max_degree)
        exps = [0] * n
        for _ in range(degree):
            exps[rng.randrange(n)] += 1
        b = corpus.coeff_bound
        re = rng.randint(-b, b)
        im = 0 if corpus.real_coefficients else rng.randint(-b, b)
        if re == 0 and im == 0:
            re = 1
        key = tuple(exps)
        coeff = ExactComplex(re, im)
        terms[key] = terms[key] + coeff if key in terms else coeff
    return Polynomial(n, terms)


def _sample_int_vector(rng: random.Random, n: int, bound: int) -> tuple[int, ...]:
    return tuple(rng.randint(-bound, bound) for _ in range(n))


# --------------------------------------------------------------------------
# claim definitions

@dataclass(frozen=True)
class ClaimDef:
    name: str
    kind: str  # "equality" | "witness" | "vector"
    corpus: CorpusSpec
    sampler: Callable[[random.Random, int, CorpusSpec], ClaimInputs] | None = None
    sides: Callable[[ClaimInputs, Callable], tuple[Polynomial, Polynomial]] | None = None
    canonical_first: Callable[[], ClaimInputs] | None = None
    coincidence: Callable[[int], ClaimInputs] | None = None
    vector_check: Callable[[random.Random], bool] | None = None


def _poly_sampler(count: int, nonzero_theta: bool = False):
    def sampler(rng: random.Random, n: int, corpus: CorpusSpec) -> ClaimInputs:
        theta = sample_theta(rng, n, corpus.theta_choices, require_nonzero=nonzero_theta)
        polys = tuple(sample_poly(rng, n, corpus) for _ in range(count))
        return ClaimInputs(n, theta, polys)
    return sampler


def _axis_poly_sampler(count: int, nonzero_theta: bool = False, distinct_pair: bool = False):
    def sampler(rng: random.Random, n: int, corpus: CorpusSpec) -> ClaimInputs:
        theta = sample_theta(rng, n, corpus.theta_choices, require_nonzero=nonzero_theta)
        polys = tuple(sample_poly(rng, n, corpus) for _ in range(count))
        meta = {"k": rng.randint(1, n)}
        if distinct_pair:
            i = rng.randint(1, n)
            j = rng.choice([v for v in range(1, n + 1) if v != i])
            meta = {"i": i, "j": j}
        return ClaimInputs(n, theta, polys, meta)
    return sampler


def _slot_sampler(rng: random.Random, n: int, corpus: CorpusSpec) -> ClaimInputs:
    theta = sample_theta(rng, n, corpus.theta_choices)
    m = rng.randint(1, n)
    p = rng.randint(1, n)
    polys = tuple(sample_poly(rng, n, corpus) for _ in range(n - 1))
    return ClaimInputs(n, theta, polys, {"m": m, "p": p})


def _distributivity_sides(slot: str):
    def sides(inputs: ClaimInputs, star) -> tuple[Polynomial, Polynomial]:
        cfg = inputs.cfg()
        n = inputs.n
        u, v, *rest = inputs.polys  # the two summands, then the fixed factors
        fixed = list(rest)  # n-1 fixed factors
        if slot == "first":
            pos = 0
        elif slot == "middle":
            pos = 1
        else:
            pos = n - 1
        def place(p):
            slots = list(fixed)
            slots.insert(pos, p)
            return slots
        lhs = star(place(u + v), cfg)
        rhs = star(place(u), cfg) + star(place(v), cfg)
        return lhs, rhs
    return sides


def _associativity_sides(inputs: ClaimInputs, star):
    cfg = inputs.cfg()
    f1, g1, h1, g2, h2 = inputs.polys
    lhs = star((star((f1, g1, h1), cfg), g2, h2), cfg)
    rhs = star((f1, g1, star((h1, g2, h2), cfg)), cfg)
    return lhs, rhs


def _associativity_canonical() -> ClaimInputs:
    n = 3
    return ClaimInputs(
        n, (Fraction(1), Fraction(0), Fraction(0)),
        (x(1, n), x(2, n), x(3, n), x(3, n), x(2, n)),
    )


def _bracket(star, f, h, mids, cfg):
    return star((f, *mids, h), cfg) - star((h, *mids, f), cfg)


def _skew_sides(inputs: ClaimInputs, star):
    cfg = inputs.cfg()
    f, h, *mids = inputs.polys
    lhs = _bracket(star, f, h, mids, cfg)
    rhs = -_bracket(star, h, f, mids, cfg)
    return lhs, rhs


def _jacobi_six_sides(inputs: ClaimInputs, star):
    cfg = inputs.cfg()
    l, f, h, g1, g2 = inputs.polys
    def br(a, b, g):
        return _bracket(star, a, b, (g,), cfg)
    total = (br(l, br(f, h, g1), g2) + br(l, br(f, h, g2), g1)
             + br(h, br(l, f, g1), g2) + br(h, br(l, f, g2), g1)
             + br(f, br(h, l, g1), g2) + br(f, br(h, l, g2), g1))
    return total, Polynomial.zero(inputs.n)


def _jacobi_expansion_sides(inputs: ClaimInputs, star):
    cfg = inputs.cfg()
    l, f, h, g1, g2 = inputs.polys
    lhs = _bracket(star, l, _bracket(star, f, h, (g1,), cfg), (g2,), cfg)
    rhs = (star((star((l, g2, f), cfg), g1, h), cfg)
           - star((star((l, g2, h), cfg), g1, f), cfg)
           - star((star((f, g1, h), cfg), g2, l), cfg)
           + star((star((h, g1, f), cfg), g2, l), cfg))
    return lhs, rhs


def _conjugation_sides(inputs: ClaimInputs, star):
    cfg = inputs.cfg()
    lhs = conjugate_star_n(inputs.polys, cfg)
    rhs = star(inputs.polys, ThetaConfig(inputs.n, tuple(-t for t in inputs.theta)))
    return lhs, rhs


def _theta_zero_sides(inputs: ClaimInputs, star):
    cfg = ThetaConfig(inputs.n, (Fraction(0),) * inputs.n)
    lhs = star(inputs.polys, cfg)
    rhs = inputs.polys[0]
    for p in inputs.polys[1:]:
        rhs = rhs * p
    return lhs, rhs


def _cf_coord_sides(which: str):
    def sides(inputs: ClaimInputs, star):
        cfg = inputs.cfg()
        k = inputs.meta["k"]
        f, g = inputs.polys
        if which == "first":
            return star_coord_first(k, f, g, cfg), star((x(k, 3), f, g), cfg)
        if which == "middle":
            return star_coord_middle(k, g, f, cfg), star((g, x(k, 3), f), cfg)
        return star_coord_last(k, f, g, cfg), star((f, g, x(k, 3)), cfg)
    return sides


def _cf_two_coords_sides(variant: str):
    def sides(inputs: ClaimInputs, star):
        cfg = inputs.cfg()
        k = inputs.meta["k"]
        (f,) = inputs.polys
        s1, s2 = sigma_power(k, 1, 3), sigma_power(k, 2, 3)
        slots = {
            "sigma-next-middle": (x(k, 3), x(s1, 3), f),
            "sigma-next-last": (x(k, 3), f, x(s1, 3)),
            "sigma2-next-middle": (x(k, 3), x(s2, 3), f),
            "sigma2-next-last": (x(k, 3), f, x(s2, 3)),
        }[variant]
        return star_two_coords(k, variant, f, cfg), star(slots, cfg)
    return sides


def _cf_complex_sides(variant: str, symmetric_fix: bool = False):
    def sides(inputs: ClaimInputs, star):
        cfg = inputs.cfg()
        i, j = inputs.meta["i"], inputs.meta["j"]
        f, g = inputs.polys
        a, abar = complex_pair(i, j, 3)
        slots = {
            "a-f-g": (a, f, g),
            "abar-f-g": (abar, f, g),
            "g-f-a": (g, f, a),
            "g-f-abar": (g, f, abar),
            "f-a-g": (f, a, g),
            "f-abar-g": (f, abar, g),
        }[variant]
        closed = star_complex_form(variant, i, j, f, g, cfg, symmetric_fix=symmetric_fix)
        return closed, star(slots, cfg)
    return sides


def _cf_nary_slot_sides(inputs: ClaimInputs, star):
    cfg = inputs.cfg()
    n, m, p = inputs.n, inputs.meta["m"], inputs.meta["p"]
    fs = inputs.polys[:m - 1]
    gs = inputs.polys[m - 1:]
    closed = star_coord_slot(SlotSpec(n, m, p), fs, gs, cfg)
    slots = list(fs) + [x(p, n)] + list(gs)
    return closed, star(tuple(slots), cfg)


def _conj_xx_sides(power: int):
    def sides(inputs: ClaimInputs, star):
        cfg = inputs.cfg()
        k = inputs.meta["k"]
        (f,) = inputs.polys
        s = sigma_power(k, power, 3)
        lhs = star((x(k, 3), x(s, 3), f), cfg).conjugate()
        rhs = star((x(k, 3), f, x(s, 3)), cfg)
        return lhs, rhs
    return sides


def _noncomm_sides(which: int):
    def sides(inputs: ClaimInputs, star):
        cfg = inputs.cfg()
        if which == 1:
            k = inputs.meta["k"]
            f, g = inputs.polys
            return star((x(k, 3), g, f), cfg), star((f, g, x(k, 3)), cfg)
        if which == 2:
            k = inputs.meta["k"]
            f, g = inputs.polys
            return star((g, x(k, 3), f), cfg), star((f, x(k, 3), g), cfg)
        i, j = inputs.meta["i"], inputs.meta["j"]
        f, g = inputs.polys
        a, _ = complex_pair(i, j, 3)
        return star((a, f, g), cfg), star((g, f, a), cfg)
    return sides


def _conj_inequality_sides(which: int):
    def sides(inputs: ClaimInputs, star):
        cfg = inputs.cfg()
        i, j = inputs.meta["i"], inputs.meta["j"]
        f, g = inputs.polys
        a, abar = complex_pair(i, j, 3)
        if which == 1:
            return star((a, f, g), cfg).conjugate(), star((abar, f, g), cfg)
        if which == 2:
            return star((g, f, a), cfg).conjugate(), star((g, f, abar), cfg)
        return star((f, a, g), cfg).conjugate(), star((f, abar, g), cfg)
    return sides


def _constant_coincidence(npolys: int, meta_axes: str):
    def build(n: int) -> ClaimInputs:
        polys = tuple(Polynomial.constant(c + 2, n) for c in range(npolys))
        meta = {"k": 1} if meta_axes == "k" else {"i": 1, "j": 2}
        return ClaimInputs(n, (Fraction(1),) * n, polys, meta)
    return build


def _omega_antisym_check(rng: random.Random) -> bool:
    q = _sample_int_vector(rng, 3, 9)
    r = _sample_int_vector(rng, 3, 9)
    lhs = freq_cross(q, r)
    rhs = tuple(-v for v in freq_cross(r, q))
    return lhs == rhs


def _det3(p, q, r) -> int:
    return (p[0] * (q[1] * r[2] - q[2] * r[1])
            - p[1] * (q[0] * r[2] - q[2] * r[0])
            + p[2] * (q[0] * r[1] - q[1] * r[0]))


def _omega_cyclic_check(rng: random.Random) -> bool:
    p = _sample_int_vector(rng, 3, 9)
    q = _sample_int_vector(rng, 3, 9)
    r = _sample_int_vector(rng, 3, 9)
    a = sum(pi * wi for pi, wi in zip(p, freq_cross(q, r)))
    b = sum(ri * wi for ri, wi in zip(r, freq_cross(p, q)))
    c = sum(qi * wi for qi, wi in zip(q, freq_cross(r, p)))
    return a == b == c == _det3(p, q, r)


def _build_claim_table() -> dict[str, ClaimDef]:
    general = CorpusSpec(dims=(3, 4))
    three = CorpusSpec(dims=(3,))
    real3 = CorpusSpec(dims=(3,), real_coefficients=True)

    defs: list[ClaimDef] = []

    def dist_sampler(rng, n, corpus):  # two summands plus n-1 fixed factors
        theta = sample_theta(rng, n, corpus.theta_choices)
        polys = tuple(sample_poly(rng, n, corpus) for _ in range(n + 1))
        return ClaimInputs(n, theta, polys)

    for idx, slot in enumerate(("first", "middle", "last"), start=1):
        defs.append(ClaimDef(
            name=f"distributivity-{idx}", kind="equality", corpus=general,
            sampler=dist_sampler, sides=_distributivity_sides(slot)))

    defs.append(ClaimDef(
        name="associativity", kind="equality", corpus=three,
        sampler=_poly_sampler(5), sides=_associativity_sides,
        canonical_first=_associativity_canonical))

    def skew_sampler(rng, n, corpus):
        theta = sample_theta(rng, n, corpus.theta_choices)
        polys = tuple(sample_poly(rng, n, corpus) for _ in range(n))
        return ClaimInputs(n, theta, polys)

    defs.append(ClaimDef(
        name="skew-symmetry", kind="equality", corpus=general,
        sampler=skew_sampler, sides=_skew_sides))

    defs.append(ClaimDef(
        name="jacobi-six-term", kind="equality", corpus=three,
        sampler=_poly_sampler(5), sides=_jacobi_six_sides))
    defs.append(ClaimDef(
        name="jacobi-expansion", kind="equality", corpus=three,
        sampler=_poly_sampler(5), sides=_jacobi_expansion_sides))

    def nfact_sampler(rng, n, corpus):
        theta = sample_theta(rng, n, corpus.theta_choices)
        polys = tuple(sample_poly(rng, n, corpus) for _ in range(n))
        return ClaimInputs(n, theta, polys)

    defs.append(ClaimDef(
        name="conjugation-law", kind="equality", corpus=general,
        sampler=nfact_sampler, sides=_conjugation_sides))
    defs.append(ClaimDef(
        name="theta-zero", kind="equality", corpus=general,
        sampler=nfact_sampler, sides=_theta_zero_sides))

    for which in ("first", "middle", "last"):
        defs.append(ClaimDef(
            name=f"cf-coord-{which}", kind="equality", corpus=three,
            sampler=_axis_poly_sampler(2), sides=_cf_coord_sides(which)))

    for idx, variant in enumerate(TWO_COORD_VARIANTS, start=1):
        defs.append(ClaimDef(
            name=f"cf-two-coords-{idx}", kind="equality", corpus=three,
            sampler=_axis_poly_sampler(1), sides=_cf_two_coords_sides(variant)))

    for idx, variant in enumerate(COMPLEX_FORM_VARIANTS, start=1):
        defs.append(ClaimDef(
            name=f"cf-complex-{idx}", kind="equality", corpus=three,
            sampler=_axis_poly_sampler(2, distinct_pair=True),
            sides=_cf_complex_sides(variant)))
    defs.append(ClaimDef(
        name="cf-complex-4-alt", kind="equality", corpus=three,
        sampler=_axis_poly_sampler(2, distinct_pair=True),
        sides=_cf_complex_sides("g-f-abar", symmetric_fix=True)))

    defs.append(ClaimDef(
        name="cf-nary-slot", kind="equality", corpus=general,
        sampler=_slot_sampler, sides=_cf_nary_slot_sides))

    for idx, power in enumerate((1, 2), start=1):
        defs.append(ClaimDef(
            name=f"conj-xx-f-{idx}", kind="equality", corpus=real3,
            sampler=_axis_poly_sampler(1), sides=_conj_xx_sides(power)))

    defs.append(ClaimDef(
        name="noncomm-witness-1", kind="witness", corpus=three,
        sampler=_axis_poly_sampler(2, nonzero_theta=True), sides=_noncomm_sides(1),
        coincidence=_constant_coincidence(2, "k")))
    defs.append(ClaimDef(
        name="noncomm-witness-2", kind="witness", corpus=three,
        sampler=_axis_poly_sampler(2, nonzero_theta=True), sides=_noncomm_sides(2),
        coincidence=_constant_coincidence(2, "k")))
    defs.append(ClaimDef(
        name="noncomm-witness-3", kind="witness", corpus=three,
        sampler=_axis_poly_sampler(2, nonzero_theta=True, distinct_pair=True),
        sides=_noncomm_sides(3),
        coincidence=_constant_coincidence(2, "ij")))

    defs.append(ClaimDef(
        name="omega-antisym", kind="vector", corpus=INT_VECTOR_CORPUS,
        vector_check=_omega_antisym_check))
    defs.append(ClaimDef(
        name="omega-cyclic", kind="vector", corpus=INT_VECTOR_CORPUS,
        vector_check=_omega_cyclic_check))

    for idx in (1, 2, 3):
        defs.append(ClaimDef(
            name=f"conj-inequality-{idx}", kind="witness", corpus=real3,
            sampler=_axis_poly_sampler(2, nonzero_theta=True, distinct_pair=True),
            sides=_conj_inequality_sides(idx),
            coincidence=_constant_coincidence(2, "ij")))

    return {d.name: d for d in defs}


CLAIMS: dict[str, ClaimDef] = _build_claim_table()
CLAIM_IDS: tuple[str, ...] = tuple(sorted(CLAIMS))

GUARANTEED_CLAIMS: tuple[str, ...] = (
    "distributivity-1", "distributivity-2", "distributivity-3",
    "skew-symmetry", "conjugation-law", "theta-zero",
    "cf-coord-first", "cf-coord-middle", "cf-coord-last",
    "cf-two-coords-1", "cf-two-coords-2", "cf-two-coords-3", "cf-two-coords-4",
    "omega-antisym", "omega-cyclic",
)


# --------------------------------------------------------------------------
# shrinking

def _shrink(inputs: ClaimInputs, still_fails: Callable[[ClaimInputs], bool],
            max_rounds: int = 12) -> ClaimInputs:
    """Greedy minimization: zero theta components, drop polynomial terms,
    simplify coefficients to 1, reduce exponents; keep a move only if the
    failure persists."""
    current = inputs
    for _ in range(max_rounds):
        changed = False

        for idx, th in enumerate(current.theta):
            if th == 0:
                continue
            cand = replace(current, theta=current.theta[:idx] + (Fraction(0),) + current.theta[idx + 1:])
            if still_fails(cand):
                current, changed = cand, True

        for pi, poly in enumerate(current.polys):
            for key in sorted(poly.terms, reverse=True):
                if key not in poly.terms:
                    continue
                new_terms = dict(poly.terms)
                del new_terms[key]
                cand_poly = Polynomial(poly.n, new_terms)
                cand = replace(current, polys=current.polys[:pi] + (cand_poly,) + current.polys[pi + 1:])
                if still_fails(cand):
                    current, changed = cand, True
                    poly = cand_poly

        one = ExactComplex(1)
        for pi, poly in enumerate(current.polys):
            for key in sorted(poly.terms, reverse=True):
                if poly.terms.get(key, one) == one:
                    continue
                new_terms = dict(poly.terms)
                new_terms[key] = one
                cand_poly = Polynomial(poly.n, new_terms)
                cand = replace(current, polys=current.polys[:pi] + (cand_poly,) + current.polys[pi + 1:])
                if still_fails(cand):
                    current, changed = cand, True
                    poly = cand_poly

        for pi, poly in enumerate(current.polys):
            for key in sorted(poly.terms, reverse=True):
                if key not in poly.terms:
                    continue
                for ax in range(poly.n):
                    if key[ax] == 0:
                        continue
                    new_key = key[:ax] + (key[ax] - 1,) + key[ax + 1:]
                    new_terms = dict(poly.terms)
                    coeff = new_terms.pop(key)
                    new_terms[new_key] = new_terms.get(new_key, ExactComplex(0)) + coeff
                    cand_poly = Polynomial(poly.n, new_terms)
                    cand = replace(current, polys=current.polys[:pi] + (cand_poly,) + current.polys[pi + 1:])
                    if still_fails(cand):
                        current, changed = cand, True
                        poly = cand_poly
                        break

        if not changed:
            break
    return current


# --------------------------------------------------------------------------
# report assembly

def _theta_strings(theta: Sequence[Fraction]) -> list[str]:
    return [str(t) for t in theta]


def _inputs_record(inputs: ClaimInputs) -> dict:
    return {
        "n": inputs.n,
        "theta": _theta_strings(inputs.theta),
        "meta": dict(sorted(inputs.meta.items())),
        "polys": [{"text": str(p), "terms": p.to_json_terms()} for p in inputs.polys],
    }


def _sides_record(lhs: Polynomial, rhs: Polynomial) -> dict:
    diff = lhs - rhs
    return {
        "lhs": {"text": str(lhs), "terms": lhs.to_json_terms()},
        "rhs": {"text": str(rhs), "terms": rhs.to_json_terms()},
        "difference": {"text": str(diff), "terms": diff.to_json_terms()},
    }


def audit_claim(claim: str, corpus: CorpusSpec | None = None, seed: int = 0,
                trials: int = 100) -> ClaimReport:
    """Evaluate one claim over `trials` sampled inputs; deterministic in
    (claim, corpus, seed, trials)."""
    if claim not in CLAIMS:
        raise UnknownClaimError(f"unknown claim id {claim!r}")
    if trials < 1:
        raise ValueError("trials must be at least 1")
    cdef = CLAIMS[claim]
    corpus = corpus or cdef.corpus
    rng = _claim_rng(seed, claim)

    if cdef.kind == "vector":
        desc = "random integer vectors with components in [-9, 9]"
        for t in range(trials):
            if not cdef.vector_check(rng):
                return ClaimReport(claim, VERDICT_FAILS, trials, seed, desc,
                                   counterexample={"trial": t, "note": "integer-vector identity failed"})
        return ClaimReport(claim, VERDICT_HOLDS, trials, seed, desc)

    def sides_with(star):
        def f(inputs: ClaimInputs):
            return cdef.sides(inputs, star)
        return f

    engine_sides = sides_with(star_n)
    oracle_sides = sides_with(star_n_stepwise)

    def engine_mismatch(inputs: ClaimInputs) -> bool:
        lhs, rhs = engine_sides(inputs)
        return lhs != rhs

    if cdef.kind == "equality":
        for t in range(trials):
            n = corpus.dims[t % len(corpus.dims)]
            if t == 0 and cdef.canonical_first is not None:
                inputs = cdef.canonical_first()
            else:
                inputs = cdef.sampler(rng, n, corpus)
            lhs, rhs = engine_sides(inputs)
            if lhs != rhs:
                shrunk = _shrink(inputs, engine_mismatch)
                olhs, orhs = oracle_sides(shrunk)
                if olhs == orhs:
                    raise RuntimeError(
                        f"claim {claim}: expansion engine and term-by-term oracle disagree "
                        f"on the counterexample; engine defect")
                slhs, srhs = engine_sides(shrunk)
                record = {
                    "trial": t,
                    "inputs": _inputs_record(shrunk),
                    **_sides_record(slhs, srhs),
                    "oracle_confirmed": True,
                }
                return ClaimReport(claim, VERDICT_FAILS, trials, seed,
                                   corpus.describe(), counterexample=record)
        return ClaimReport(claim, VERDICT_HOLDS, trials, seed, corpus.describe())

    # witness kind: the claim asserts the two sides differ generically
    witness_record = None
    for t in range(trials):
        n = corpus.dims[t % len(corpus.dims)]
        inputs = cdef.sampler(rng, n, corpus)
        lhs, rhs = engine_sides(inputs)
        if lhs != rhs and witness_record is None:
            shrunk = _shrink(inputs, engine_mismatch)
            olhs, orhs = oracle_sides(shrunk)
            if olhs == orhs:
                raise RuntimeError(f"claim {claim}: witness not confirmed by oracle")
            slhs, srhs = engine_sides(shrunk)
            witness_record = {
                "trial": t,
                "inputs": _inputs_record(shrunk),
                **_sides_record(slhs, srhs),
                "oracle_confirmed": True,
            }
            break
    coincidence_ok = True
    if cdef.coincidence is not None:
        co_inputs = cdef.coincidence(corpus.dims[0])
        clhs, crhs = engine_sides(co_inputs)
        coincidence_ok = clhs == crhs
    if witness_record is not None and coincidence_ok:
        witness_record["coincidence"] = "sides coincide on constant inputs"
        return ClaimReport(claim, VERDICT_HOLDS, trials, seed, corpus.describe(),
                           witness=witness_record)
    note = ("no differing inputs found" if witness_record is None
            else "degenerate inputs unexpectedly differ")
    return ClaimReport(claim, VERDICT_FAILS, trials, seed, corpus.describe(),
                       counterexample={"note": note})


def audit_jacobi(corpus: CorpusSpec | None = None, seed: int = 0,
                 trials: int = 100) -> tuple[ClaimReport, ClaimReport]:
    """The six-term bracket identity and the expansion relation it is said
    to rest on, audited independently."""
    return (audit_claim("jacobi-six-term", corpus, seed, trials),
            audit_claim("jacobi-expansion", corpus, seed, trials))


def run_suite(seed: int = 0, trials: int = 100, tolerance: float = 1e-9) -> list[ClaimReport]:
    """Audit every claim; deterministic given (seed, trials).  The
    tolerance parameter is reserved for float-valued claims; the
    polynomial claims compare exactly."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    return [audit_claim(claim, seed=seed, trials=trials) for claim in CLAIM_IDS]


def reports_to_json(reports: Sequence[ClaimReport]) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=2)


def all_guaranteed_hold(reports: Sequence[ClaimReport]) -> bool:
    by_name = {r.claim: r for r in reports}
    return all(by_name[c].verdict == VERDICT_HOLDS
               for c in GUARANTEED_CLAIMS if c in by_name)
