"""Positively graded polynomial rings, monomial orders, homogeneous polynomials.

Monomials are plain exponent tuples; polynomials are immutable term dicts
``{exponents: coefficient}`` owned by a :class:`GradedPolyRing` that supplies
the field, the weights and the monomial order.
"""

from __future__ import annotations

from typing import Callable, Iterator

from .errors import ParseError, RingMismatch, UnknownVariable
from .fields import Field

Monomial = tuple  # exponent vectors, one entry per variable

_DEGREE_CAP = 2**16


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial):
    """Return a/b as a monomial, or None when b does not divide a."""
    out = []
    for x, y in zip(a, b):
        if x < y:
            return None
        out.append(x - y)
    return tuple(out)


def mono_divides(b: Monomial, a: Monomial) -> bool:
    return all(y <= x for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_coprime(a: Monomial, b: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


class MonomialOrder:
    """One of GrevLex, Lex, WeightedGrevLex.

    GrevLex and WeightedGrevLex compare weighted degree first (so they are
    degree-compatible with the declared weights); given the weights they are
    the same order and both names are accepted.
    """

    KINDS = ("GrevLex", "Lex", "WeightedGrevLex")

    def __init__(self, kind: str):
        if kind not in self.KINDS:
            raise ValueError(f"unknown monomial order {kind!r}")
        self.kind = kind

    @property
    def degree_compatible(self) -> bool:
        return self.kind != "Lex"

    def key_function(self, weights: tuple) -> Callable[[Monomial], tuple]:
        if self.kind == "Lex":
            return lambda m: m
        # graded reverse lex: higher weighted degree wins, ties broken by the
        # *smallest* trailing exponent (classic grevlex tiebreak)
        def key(m, _w=weights):
            d = sum(e * w for e, w in zip(m, _w))
            return (d,) + tuple(-e for e in reversed(m))

        return key

    def __repr__(self):
        return self.kind

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and self.kind == other.kind

    def __hash__(self):
        return hash(self.kind)


class GradedPolyRing:
    """k[x_1..x_n] with positive weights and a fixed monomial order."""

    def __init__(self, field: Field, variables, order: str | MonomialOrder = "GrevLex"):
        names, weights = [], []
        for v in variables:
            if isinstance(v, str):
                name, weight = v, 1
            else:
                name, weight = v
            names.append(name)
            weights.append(int(weight))
        if len(set(names)) != len(names):
            raise ValueError("variable names must be distinct")
        if any(w < 1 for w in weights):
            raise ValueError("all weights must be >= 1")
        self.field = field
        self.names = tuple(names)
        self.weights = tuple(weights)
        self.nvars = len(names)
        self.order = order if isinstance(order, MonomialOrder) else MonomialOrder(order)
        self.mono_key = self.order.key_function(self.weights)
        self._var_index = {n: i for i, n in enumerate(names)}
        self._zero_mono = (0,) * self.nvars

    def __repr__(self):
        vs = ", ".join(
            n if w == 1 else f"{n}:{w}" for n, w in zip(self.names, self.weights)
        )
        return f"{self.field}[{vs}]"

    def __eq__(self, other):
        return (
            isinstance(other, GradedPolyRing)
            and self.field == other.field
            and self.names == other.names
            and self.weights == other.weights
            and self.order == other.order
        )

    def __hash__(self):
        return hash((self.field, self.names, self.weights, self.order))

    def check_same(self, other):
        if self != other:
            raise RingMismatch(f"{self} vs {other}")

    # -- monomials -----------------------------------------------------------

    def mono_deg(self, m: Monomial) -> int:
        return sum(e * w for e, w in zip(m, self.weights))

    def monomials_of_degree(self, d: int) -> list[Monomial]:
        """All monomials of weighted degree exactly d, sorted descending."""
        out = []

        def rec(i, remaining, acc):
            if i == self.nvars - 1:
                w = self.weights[i]
                if remaining % w == 0:
                    out.append(tuple(acc + [remaining // w]))
                return
            w = self.weights[i]
            for e in range(remaining // w, -1, -1):
                rec(i + 1, remaining - e * w, acc + [e])

        if d < 0:
            return []
        if self.nvars == 0:
            return [()] if d == 0 else []
        rec(0, d, [])
        out.sort(key=self.mono_key, reverse=True)
        return out

    # -- polynomial constructors ----------------------------------------------

    @property
    def zero(self) -> "Poly":
        return Poly(self, {})

    @property
    def one(self) -> "Poly":
        return Poly(self, {self._zero_mono: self.field.one})

    def var(self, i: int) -> "Poly":
        m = [0] * self.nvars
        m[i] = 1
        return Poly(self, {tuple(m): self.field.one})

    def gens(self) -> list["Poly"]:
        return [self.var(i) for i in range(self.nvars)]

    def from_scalar(self, c) -> "Poly":
        c = self.field.of(c)
        return Poly(self, {self._zero_mono: c} if c else {})

    def from_terms(self, terms: dict) -> "Poly":
        return Poly(self, {m: c for m, c in terms.items() if c})

    def monomial(self, m: Monomial, c=None) -> "Poly":
        c = self.field.one if c is None else self.field.of(c)
        return Poly(self, {tuple(m): c} if c else {})


class Poly:
    """Immutable polynomial; no zero coefficients are ever stored."""

    __slots__ = ("ring", "terms", "_lead", "_hash")

    def __init__(self, ring: GradedPolyRing, terms: dict):
        self.ring = ring
        self.terms = terms
        self._lead = None
        self._hash = None

    # -- structure -------------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def leading_monomial(self) -> Monomial:
        if self._lead is None:
            if not self.terms:
                raise ValueError("zero polynomial has no leading term")
            self._lead = max(self.terms, key=self.ring.mono_key)
        return self._lead

    def leading_coeff(self):
        return self.terms[self.leading_monomial()]

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda t: self.ring.mono_key(t[0]), reverse=True)

    def degree(self) -> int:
        """Max weighted degree of the terms (zero poly: -1)."""
        if not self.terms:
            return -1
        return max(self.ring.mono_deg(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {self.ring.mono_deg(m) for m in self.terms}
        return len(degs) <= 1

    def homogeneous_degree(self):
        """The common degree of all terms; None for 0, error if inhomogeneous."""
        degs = {self.ring.mono_deg(m) for m in self.terms}
        if not degs:
            return None
        if len(degs) > 1:
            raise ValueError(f"inhomogeneous polynomial {self}")
        return degs.pop()

    def constant_coeff(self):
        return self.terms.get(self.ring._zero_mono, self.ring.field.zero)

    # -- arithmetic --------------------------------------------------------------

    def _check(self, other) -> "Poly":
        if not isinstance(other, Poly):
            raise TypeError(f"cannot combine Poly with {type(other)!r}")
        self.ring.check_same(other.ring)
        return other

    def __add__(self, other):
        other = self._check(other)
        fld = self.ring.field
        big, small = (self.terms, other.terms) if len(self.terms) >= len(other.terms) else (other.terms, self.terms)
        out = dict(big)
        for m, c in small.items():
            s = fld.add(out.get(m, fld.zero), c)
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Poly(self.ring, out)

    def __neg__(self):
        fld = self.ring.field
        return Poly(self.ring, {m: fld.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        other = self._check(other)
        if not self.terms or not other.terms:
            return Poly(self.ring, {})
        if self.degree() + other.degree() > _DEGREE_CAP:
            raise OverflowError(f"degree cap {_DEGREE_CAP} exceeded")
        fld = self.ring.field
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                c = fld.mul(c1, c2)
                s = fld.add(out.get(m, fld.zero), c)
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return Poly(self.ring, out)

    def scale(self, c) -> "Poly":
        fld = self.ring.field
        c = fld.of(c)
        if not c:
            return Poly(self.ring, {})
        return Poly(self.ring, {m: fld.mul(cc, c) for m, cc in self.terms.items()})

    def mul_monomial(self, m: Monomial, c=None) -> "Poly":
        fld = self.ring.field
        c = fld.one if c is None else c
        if not c:
            return Poly(self.ring, {})
        return Poly(self.ring, {mono_mul(mm, m): fld.mul(cc, c) for mm, cc in self.terms.items()})

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n >> 1
            if base_needed:
                base = base * base
            n >>= 1
        return result

    def monic(self) -> "Poly":
        if not self.terms:
            return self
        return self.scale(self.ring.field.inv(self.leading_coeff()))

    # -- equality / hashing ---------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(sorted(self.terms.items())))
        return self._hash

    # -- printing ----------------------------------------------------------------

    def _term_str(self, m: Monomial, c) -> str:
        parts = []
        for name, e in zip(self.ring.names, m):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        cs = self.ring.field.to_str(c)
        if not parts:
            return cs
        if cs == "1":
            return "*".join(parts)
        if cs == "-1":
            return "-" + "*".join(parts)
        return cs + "*" + "*".join(parts)

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = [self._term_str(m, c) for m, c in self.sorted_terms()]
        out = pieces[0]
        for p in pieces[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __repr__(self):
        return f"Poly({self})"


# -- parsing -------------------------------------------------------------------
#
# Grammar: expr := term (('+'|'-') term)* ; term := factor ('*' factor)* ;
# factor := ('-')* atom ('^' INT)? ; atom := NUM | NAME | '(' expr ')' ;
# NUM := INT ('/' INT)? .  The parser works over an arbitrary symbol table so
# module-relation syntax (polynomial coefficients times generator names) can
# reuse it; generator names resolve to _VecValue and products of two
# generators are rejected.


class _VecValue:
    """A formal combination {generator name: Poly} during relation parsing."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict):
        self.coeffs = coeffs


def _tokenize(text: str):
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("NUM", text[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("NAME", text[i:j], i))
            i = j
            continue
        if ch in "+-*^()/":
            tokens.append((ch, ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(("END", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: GradedPolyRing, symbols: dict | None):
        self.text = text
        self.ring = ring
        self.symbols = symbols or {}
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind):
        tok = self.advance()
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[1]!r}", tok[2])
        return tok

    # value combinators ---------------------------------------------------------

    def _add(self, a, b, pos):
        if isinstance(a, Poly) and isinstance(b, Poly):
            return a + b
        if isinstance(a, _VecValue) and isinstance(b, _VecValue):
            out = dict(a.coeffs)
            for g, p in b.coeffs.items():
                s = out.get(g, self.ring.zero) + p
                if s.is_zero():
                    out.pop(g, None)
                else:
                    out[g] = s
            return _VecValue(out)
        if isinstance(a, Poly) and a.is_zero():
            return b
        if isinstance(b, Poly) and b.is_zero():
            return a
        raise ParseError("cannot add a polynomial and a generator term", pos)

    def _mul(self, a, b, pos):
        if isinstance(a, Poly) and isinstance(b, Poly):
            return a * b
        if isinstance(a, _VecValue) and isinstance(b, _VecValue):
            raise ParseError("product of two generator terms", pos)
        vec, poly = (a, b) if isinstance(a, _VecValue) else (b, a)
        out = {}
        for g, p in vec.coeffs.items():
            q = p * poly
            if not q.is_zero():
                out[g] = q
        return _VecValue(out)

    def _neg(self, a):
        if isinstance(a, Poly):
            return -a
        return _VecValue({g: -p for g, p in a.coeffs.items()})

    # grammar ----------------------------------------------------------------------

    def parse(self):
        v = self.expr()
        tok = self.peek()
        if tok[0] != "END":
            raise ParseError(f"unexpected trailing {tok[1]!r}", tok[2])
        return v

    def expr(self):
        tok = self.peek()
        v = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.advance()
            rhs = self.term()
            if op[0] == "-":
                rhs = self._neg(rhs)
            v = self._add(v, rhs, op[2])
        return v

    def term(self):
        v = self.factor()
        while self.peek()[0] == "*":
            op = self.advance()
            v = self._mul(v, self.factor(), op[2])
        return v

    def factor(self):
        negate = False
        while self.peek()[0] == "-":
            self.advance()
            negate = not negate
        v = self.atom()
        if self.peek()[0] == "^":
            tok = self.advance()
            num = self.expect("NUM")
            if not isinstance(v, Poly):
                raise ParseError("cannot raise a generator term to a power", tok[2])
            v = v ** int(num[1])
        return self._neg(v) if negate else v

    def atom(self):
        tok = self.advance()
        if tok[0] == "NUM":
            num = int(tok[1])
            if self.peek()[0] == "/":
                self.advance()
                den = self.expect("NUM")
                if int(den[1]) == 0:
                    raise ParseError("zero denominator", den[2])
                from fractions import Fraction

                return self.ring.from_scalar(Fraction(num, int(den[1])))
            return self.ring.from_scalar(num)
        if tok[0] == "NAME":
            name = tok[1]
            if name in self.ring._var_index:
                return self.ring.var(self.ring._var_index[name])
            if name in self.symbols:
                return _VecValue({name: self.ring.one})
            raise UnknownVariable(f"unknown variable {name!r}", tok[2])
        if tok[0] == "(":
            v = self.expr()
            self.expect(")")
            return v
        raise ParseError(f"unexpected {tok[1]!r}", tok[2])


def parse_poly(text: str, ring: GradedPolyRing) -> Poly:
    """Parse polynomial text over the ring's variables."""
    v = _Parser(text, ring, None).parse()
    assert isinstance(v, Poly)
    return v


def parse_module_element(text: str, ring: GradedPolyRing, generators) -> dict:
    """Parse a relation like ``x*g0 - g1`` into {generator name: Poly}."""
    v = _Parser(text, ring, {g: None for g in generators}).parse()
    if isinstance(v, Poly):
        if v.is_zero():
            return {}
        raise ParseError(f"expected a combination of generators, got polynomial {v}")
    return v.coeffs
