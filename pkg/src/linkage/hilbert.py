"""Hilbert series, Krull dimension and multiplicity from leading-term data.

A series is stored as an integer Laurent numerator over the fixed denominator
prod_i (1 - t^{w_i}).  The numerator of a monomial-ideal quotient is computed
by the classic pivot-variable splitting recursion; graded free modules
contribute a t^twist per component.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce

from .rings import Monomial, mono_divides

IntPoly = dict  # {degree: int}, no zero values


def _poly_add(a: IntPoly, b: IntPoly) -> IntPoly:
    out = dict(a)
    for d, c in b.items():
        s = out.get(d, 0) + c
        if s:
            out[d] = s
        else:
            out.pop(d, None)
    return out


def _poly_scale_shift(a: IntPoly, shift: int, scale: int = 1) -> IntPoly:
    return {d + shift: c * scale for d, c in a.items()}


def _poly_mul(a: IntPoly, b: IntPoly) -> IntPoly:
    out: IntPoly = {}
    for d1, c1 in a.items():
        for d2, c2 in b.items():
            d = d1 + d2
            s = out.get(d, 0) + c1 * c2
            if s:
                out[d] = s
            else:
                out.pop(d, None)
    return out


def _minimalize(gens: list[Monomial]) -> list[Monomial]:
    gens = sorted(set(gens), key=lambda m: (sum(m), m))
    out: list[Monomial] = []
    for g in gens:
        if not any(mono_divides(h, g) for h in out):
            out.append(g)
    return out


def monomial_ideal_numerator(gens: list[Monomial], weights: tuple) -> IntPoly:
    """Numerator of the Hilbert series of S/(gens) over prod(1 - t^w)."""

    def deg(m: Monomial) -> int:
        return sum(e * w for e, w in zip(m, weights))

    def rec(gens: list[Monomial]) -> IntPoly:
        gens = _minimalize(gens)
        if not gens:
            return {0: 1}
        if any(all(e == 0 for e in g) for g in gens):
            return {}
        # pairwise coprime: complete intersection of monomials
        nvars = len(weights)
        support = [set(i for i in range(nvars) if g[i]) for g in gens]
        coprime = True
        seen: set = set()
        for s in support:
            if s & seen:
                coprime = False
                break
            seen |= s
        if coprime:
            return reduce(_poly_mul, ({0: 1, deg(g): -1} for g in gens), {0: 1})
        # pivot: variable occurring most often, minimal positive exponent
        counts = [0] * nvars
        for g in gens:
            for i, e in enumerate(g):
                if e:
                    counts[i] += 1
        piv = max(range(nvars), key=lambda i: counts[i])
        e = min(g[piv] for g in gens if g[piv])
        pivot = tuple(e if i == piv else 0 for i in range(nvars))
        plus = rec(gens + [pivot])
        colon = rec([tuple(max(gi - pi, 0) for gi, pi in zip(g, pivot)) for g in gens])
        return _poly_add(plus, _poly_scale_shift(colon, deg(pivot)))

    return rec(list(gens))


class HilbertSeries:
    """numerator(t) / prod_i (1 - t^{w_i}) with integer Laurent numerator."""

    __slots__ = ("numerator", "weights", "_reduced")

    def __init__(self, numerator: IntPoly, weights: tuple):
        self.numerator = {d: c for d, c in numerator.items() if c}
        self.weights = tuple(weights)
        self._reduced = None

    @classmethod
    def zero(cls, weights) -> "HilbertSeries":
        return cls({}, weights)

    @classmethod
    def free_module(cls, twists, weights) -> "HilbertSeries":
        num: IntPoly = {}
        for a in twists:
            num[a] = num.get(a, 0) + 1
        return cls(num, weights)

    def is_zero(self) -> bool:
        return not self.numerator

    def __eq__(self, other):
        return (
            isinstance(other, HilbertSeries)
            and self.weights == other.weights
            and self.numerator == other.numerator
        )

    def __hash__(self):
        return hash((tuple(sorted(self.numerator.items())), self.weights))

    def shifted(self, s: int) -> "HilbertSeries":
        """Series of M(-s): coefficients move up by s."""
        return HilbertSeries(_poly_scale_shift(self.numerator, s), self.weights)

    def plus(self, other: "HilbertSeries") -> "HilbertSeries":
        return HilbertSeries(_poly_add(self.numerator, other.numerator), self.weights)

    def minus(self, other: "HilbertSeries") -> "HilbertSeries":
        return HilbertSeries(
            _poly_add(self.numerator, _poly_scale_shift(other.numerator, 0, -1)), self.weights
        )

    def min_degree(self):
        """Smallest degree with a nonzero coefficient (None for the zero module)."""
        if not self.numerator:
            return None
        lo = min(self.numerator)
        d = lo
        while True:
            c = self.coefficient(d)
            if c:
                return d
            d += 1

    def coefficients(self, lo: int, hi: int) -> list[int]:
        """Power-series coefficients for degrees lo..hi inclusive."""
        if not self.numerator:
            return [0] * (hi - lo + 1)
        base = min(self.numerator)
        if hi < base:
            return [0] * (hi - lo + 1)
        size = hi - base + 1
        arr = [0] * size
        for d, c in self.numerator.items():
            if d <= hi:
                arr[d - base] = c
        for w in self.weights:
            for i in range(w, size):
                arr[i] += arr[i - w]
        out = []
        for d in range(lo, hi + 1):
            out.append(arr[d - base] if d >= base else 0)
        return out

    def coefficient(self, d: int) -> int:
        return self.coefficients(d, d)[0]

    # -- pole data -------------------------------------------------------------

    def _reduce_at_one(self):
        """Write numerator = (1-t)^nu * N~ with N~(1) != 0; return (nu, N~)."""
        if self._reduced is None:
            num = dict(self.numerator)
            nu = 0
            while num and sum(num.values()) == 0:
                # divide by (1 - t): quotient q satisfies q[d] = q[d-1] - ... ;
                # synthetic division from the bottom
                lo, hi = min(num), max(num)
                q: IntPoly = {}
                carry = 0
                for d in range(lo, hi + 1):
                    carry = num.get(d, 0) + carry
                    if d < hi and carry:
                        q[d] = carry
                num = q
                nu += 1
            self._reduced = (nu, num)
        return self._reduced

    def krull_dim(self) -> int:
        """Pole order at t=1; -1 for the zero module (dim of empty support)."""
        if self.is_zero():
            return -1
        nu, _ = self._reduce_at_one()
        return len(self.weights) - nu

    def multiplicity(self) -> Fraction:
        if self.is_zero():
            return Fraction(0)
        nu, red = self._reduce_at_one()
        wprod = 1
        for w in self.weights:
            wprod *= w
        return Fraction(sum(red.values()), wprod)

    def is_finite(self) -> bool:
        return self.krull_dim() <= 0

    def finite_function(self) -> IntPoly:
        """For a finite-length module, the full Hilbert function as a dict."""
        if self.is_zero():
            return {}
        if not self.is_finite():
            raise ValueError("module is not finite length")
        lo = min(self.numerator)
        hi = max(self.numerator)
        vals = self.coefficients(lo, hi)
        # beyond the top numerator degree all coefficients are zero
        return {lo + i: v for i, v in enumerate(vals) if v}

    def length(self) -> int:
        return sum(self.finite_function().values())

    def __repr__(self):
        num = " + ".join(
            f"{c}*t^{d}" if d else str(c) for d, c in sorted(self.numerator.items())
        )
        den = "".join(f"(1-t^{w})" for w in self.weights)
        return f"({num or 0})/{den}"
