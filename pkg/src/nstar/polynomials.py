"""Multivariate polynomials with exact coefficients.

Terms are stored as a dict from exponent tuples to ExactComplex
coefficients:

    {(1, 1, 0): 1, (0, 0, 0): i/2}   means   x1*x2 + (1/2)i

Zero coefficients are never stored, so two polynomials are equal iff
their term dicts are equal.  Serialization and printing order terms
graded-lexicographically (total degree first, then exponents), highest
first, which keeps every output deterministic.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .scalars import ExactComplex, ONE, ZERO, format_scalar, scalar_is_negative_leading

MultiIndex = tuple[int, ...]


def _grlex_key(exps: MultiIndex):
    return (sum(exps), exps)


class Polynomial:
    """Exact polynomial in n variables x1..xn."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[MultiIndex, ExactComplex] | None = None):
        if n < 1:
            raise ValueError("dimension must be positive")
        clean: dict[MultiIndex, ExactComplex] = {}
        if terms:
            for exps, coeff in terms.items():
                exps = tuple(exps)
                if len(exps) != n or any(e < 0 for e in exps):
                    raise ValueError(f"bad multi-index {exps} for dimension {n}")
                coeff = ExactComplex.coerce(coeff)
                if coeff:
                    prev = clean.get(exps)
                    total = coeff if prev is None else prev + coeff
                    if total:
                        clean[exps] = total
                    elif exps in clean:
                        del clean[exps]
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(n: int) -> "Polynomial":
        return Polynomial(n)

    @staticmethod
    def constant(c, n: int) -> "Polynomial":
        c = ExactComplex.coerce(c)
        return Polynomial(n, {(0,) * n: c} if c else {})

    @staticmethod
    def coordinate(k: int, n: int) -> "Polynomial":
        """The coordinate function x_k (1-based)."""
        if not 1 <= k <= n:
            raise ValueError(f"coordinate index {k} out of range 1..{n}")
        exps = tuple(1 if i == k - 1 else 0 for i in range(n))
        return Polynomial(n, {exps: ONE})

    @staticmethod
    def monomial(exps: Sequence[int], coeff, n: int | None = None) -> "Polynomial":
        exps = tuple(exps)
        return Polynomial(n if n is not None else len(exps), {exps: ExactComplex.coerce(coeff)})

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def sorted_terms(self) -> list[tuple[MultiIndex, ExactComplex]]:
        return sorted(self.terms.items(), key=lambda kv: _grlex_key(kv[0]), reverse=True)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, ExactComplex)):
            other = Polynomial.constant(other, self.n)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    __hash__ = None  # mutable-dict backed; not hashable

    # -- arithmetic --------------------------------------------------------

    def _coerce_operand(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.n != self.n:
                raise ValueError("dimension mismatch")
            return other
        return Polynomial.constant(other, self.n)

    def __add__(self, other) -> "Polynomial":
        other = self._coerce_operand(other)
        out = dict(self.terms)
        for exps, coeff in other.terms.items():
            cur = out.get(exps)
            total = coeff if cur is None else cur + coeff
            if total:
                out[exps] = total
            elif exps in out:
                del out[exps]
        p = Polynomial.__new__(Polynomial)
        object.__setattr__(p, "n", self.n)
        object.__setattr__(p, "terms", out)
        return p

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        p = Polynomial.__new__(Polynomial)
        object.__setattr__(p, "n", self.n)
        object.__setattr__(p, "terms", {e: -c for e, c in self.terms.items()})
        return p

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._coerce_operand(other))

    def __rsub__(self, other) -> "Polynomial":
        return self._coerce_operand(other) + (-self)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction, ExactComplex)):
            c = ExactComplex.coerce(other)
            if not c:
                return Polynomial.zero(self.n)
            p = Polynomial.__new__(Polynomial)
            object.__setattr__(p, "n", self.n)
            object.__setattr__(p, "terms", {e: v * c for e, v in self.terms.items()})
            return p
        other = self._coerce_operand(other)
        out: dict[MultiIndex, ExactComplex] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                prod = c1 * c2
                cur = out.get(exps)
                total = prod if cur is None else cur + prod
                if total:
                    out[exps] = total
                elif exps in out:
                    del out[exps]
        p = Polynomial.__new__(Polynomial)
        object.__setattr__(p, "n", self.n)
        object.__setattr__(p, "terms", out)
        return p

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        out = Polynomial.constant(1, self.n)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- calculus ----------------------------------------------------------

    def diff(self, axis: int) -> "Polynomial":
        """Exact partial derivative with respect to x_axis (1-based)."""
        if not 1 <= axis <= self.n:
            raise ValueError(f"axis {axis} out of range 1..{self.n}")
        j = axis - 1
        out: dict[MultiIndex, ExactComplex] = {}
        for exps, coeff in self.terms.items():
            e = exps[j]
            if e == 0:
                continue
            new = exps[:j] + (e - 1,) + exps[j + 1:]
            out[new] = coeff * e
        p = Polynomial.__new__(Polynomial)
        object.__setattr__(p, "n", self.n)
        object.__setattr__(p, "terms", out)
        return p

    def conjugate(self) -> "Polynomial":
        """Complex conjugate (coefficient-wise; the variables are real)."""
        p = Polynomial.__new__(Polynomial)
        object.__setattr__(p, "n", self.n)
        object.__setattr__(p, "terms", {e: c.conjugate() for e, c in self.terms.items()})
        return p

    # -- evaluation --------------------------------------------------------

    def eval_exact(self, point: Sequence) -> ExactComplex:
        """Evaluate at a point with rational (or ExactComplex) components."""
        if len(point) != self.n:
            raise ValueError("point dimension mismatch")
        pt = [ExactComplex.coerce(v) if not isinstance(v, ExactComplex) else v for v in point]
        total = ZERO
        for exps, coeff in self.terms.items():
            val = coeff
            for v, e in zip(pt, exps):
                if e:
                    val = val * v**e
            total = total + val
        return total

    def eval_complex(self, point: Sequence[float]) -> complex:
        if len(point) != self.n:
            raise ValueError("point dimension mismatch")
        total = 0j
        for exps, coeff in self.terms.items():
            val = coeff.to_complex()
            for v, e in zip(point, exps):
                if e:
                    val *= v**e
            total += val
        return total

    def max_coeff_magnitude(self) -> float:
        if not self.terms:
            return 0.0
        return max(abs(c) for c in self.terms.values())

    # -- printing / serialization ------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces: list[str] = []
        for idx, (exps, coeff) in enumerate(self.sorted_terms()):
            neg = scalar_is_negative_leading(coeff)
            mag = -coeff if neg else coeff
            body = _term_str(exps, mag)
            if idx == 0:
                pieces.append(f"-{body}" if neg else body)
            else:
                pieces.append(f" - {body}" if neg else f" + {body}")
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"<Polynomial n={self.n} {self}>"

    def to_json_terms(self) -> list[dict]:
        out = []
        for exps, c in self.sorted_terms():
            rec = {
                "exponents": list(exps),
                "re_num": c.re.numerator, "re_den": c.re.denominator,
                "im_num": c.im.numerator, "im_den": c.im.denominator,
            }
            if c.rt2_re or c.rt2_im:
                rec["rt2_re_num"] = c.rt2_re.numerator
                rec["rt2_re_den"] = c.rt2_re.denominator
                rec["rt2_im_num"] = c.rt2_im.numerator
                rec["rt2_im_den"] = c.rt2_im.denominator
            out.append(rec)
        return out

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "terms": self.to_json_terms()})

    @staticmethod
    def from_json_terms(n: int, records: Iterable[Mapping]) -> "Polynomial":
        terms: dict[MultiIndex, ExactComplex] = {}
        for rec in records:
            exps = tuple(rec["exponents"])
            c = ExactComplex(
                Fraction(rec["re_num"], rec["re_den"]),
                Fraction(rec["im_num"], rec["im_den"]),
                Fraction(rec.get("rt2_re_num", 0), rec.get("rt2_re_den", 1)),
                Fraction(rec.get("rt2_im_num", 0), rec.get("rt2_im_den", 1)),
            )
            terms[exps] = c
        return Polynomial(n, terms)

    @staticmethod
    def from_json(text: str) -> "Polynomial":
        data = json.loads(text)
        return Polynomial.from_json_terms(data["n"], data["terms"])


def _monomial_str(exps: MultiIndex) -> str:
    parts = []
    for i, e in enumerate(exps):
        if e == 1:
            parts.append(f"x{i + 1}")
        elif e > 1:
            parts.append(f"x{i + 1}^{e}")
    return "*".join(parts)


def _term_str(exps: MultiIndex, coeff: ExactComplex) -> str:
    mono = _monomial_str(exps)
    if not mono:
        s = format_scalar(coeff)
        # standalone fraction-valued imaginary coefficient prints as (p/q)i
        return s
    if coeff == ONE:
        return mono
    s = format_scalar(coeff)
    if coeff.is_rational_complex() and not coeff.im and coeff.re.denominator == 1:
        return f"{s}*{mono}"
    if coeff.is_rational_complex() and not coeff.re and coeff.im.denominator == 1:
        return f"{s}*{mono}"  # e.g. 2i*x1, i*x1
    return f"({s})*{mono}"


def x(k: int, n: int) -> Polynomial:
    """Shorthand for the coordinate polynomial x_k in dimension n."""
    return Polynomial.coordinate(k, n)
