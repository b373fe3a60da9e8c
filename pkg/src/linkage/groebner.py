"""Groebner bases for homogeneous ideals and graded submodules of free modules.

Everything runs over the ambient polynomial ring S; computations over a
quotient R = S/I lift to S by appending I-multiples of the unit vectors.
Ideals are treated as submodules of the rank-1 free module.  The module order
is position-over-term; syzygies and lifting use a block elimination order with
tag components ranked below the ambient ones.
"""

from __future__ import annotations

import heapq
from typing import Iterable, Optional

from .errors import AmbientMismatch
from .rings import (
    GradedPolyRing,
    Monomial,
    Poly,
    mono_coprime,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
)

# A module term index is (component, monomial); a vector is {index: coeff}.


class ModuleOrder:
    """Position-over-term order on a free module with given twists.

    Positions are ranked by ``rank_key`` (default: twist, then index; lower
    key = higher priority), ties within a position broken by the ring order.
    """

    __slots__ = ("ring", "twists", "posw", "_mono_key")

    def __init__(self, ring: GradedPolyRing, twists, rank_key=None):
        self.ring = ring
        self.twists = tuple(twists)
        n = len(self.twists)
        if rank_key is None:
            ranked = sorted(range(n), key=lambda i: (self.twists[i], i))
        else:
            ranked = sorted(range(n), key=rank_key)
        self.posw = [0] * n
        for priority, comp in enumerate(ranked):
            self.posw[comp] = -priority  # bigger = leads
        self._mono_key = ring.mono_key

    def key(self, idx):
        return (self.posw[idx[0]], self._mono_key(idx[1]))

    def term_degree(self, idx) -> int:
        return self.ring.mono_deg(idx[1]) + self.twists[idx[0]]


def block_order(ring: GradedPolyRing, twists, block_sizes) -> ModuleOrder:
    """Positions in earlier blocks rank above all positions in later blocks."""
    bounds = []
    acc = 0
    for size in block_sizes:
        acc += size
        bounds.append(acc)

    def rank_key(i):
        for b, bound in enumerate(bounds):
            if i < bound:
                return (b, i)
        raise IndexError(i)

    return ModuleOrder(ring, twists, rank_key=rank_key)


class MVec:
    """Homogeneous element of a free module: {(component, monomial): coeff}."""

    __slots__ = ("t", "_lead")

    def __init__(self, t: dict):
        self.t = t
        self._lead = None

    def __bool__(self):
        return bool(self.t)

    def lead(self, order: ModuleOrder):
        if self._lead is None:
            self._lead = max(self.t, key=order.key)
        return self._lead

    def copy(self):
        return MVec(dict(self.t))

    def degree(self, order: ModuleOrder) -> int:
        for idx in self.t:
            return order.term_degree(idx)
        return -1

    def __repr__(self):
        return f"MVec({self.t})"


def vec_from_column(entries: Iterable[tuple[int, Poly]]) -> MVec:
    """Build a vector from (component, polynomial) pairs."""
    t: dict = {}
    for comp, poly in entries:
        for m, c in poly.terms.items():
            t[(comp, m)] = c
    return MVec(t)


def vec_to_polys(v: MVec, rank: int, ring: GradedPolyRing) -> list[Poly]:
    cols: list[dict] = [dict() for _ in range(rank)]
    for (comp, m), c in v.t.items():
        cols[comp][m] = c
    return [Poly(ring, d) for d in cols]


def vec_add_scaled(target: dict, src: dict, mono: Monomial, coeff, field):
    """target += coeff * x^mono * src, in place."""
    for (comp, m), c in src.items():
        idx = (comp, mono_mul(m, mono))
        s = field.add(target.get(idx, field.zero), field.mul(c, coeff))
        if s:
            target[idx] = s
        else:
            target.pop(idx, None)


def reduce_vector(v: MVec, gb_index: dict, order: ModuleOrder, field, tail: bool = True) -> MVec:
    """Full normal form of v against GB elements indexed by lead component.

    ``gb_index`` maps component -> list of (lead monomial, lead coeff, MVec).
    With ``tail=False`` only the leading term is put in normal form.
    """
    work = dict(v.t)
    done: dict = {}
    while work:
        idx = max(work, key=order.key)
        comp, m = idx
        c = work.pop(idx)
        hit = None
        for lm, lc, g in gb_index.get(comp, ()):
            q = mono_div(m, lm)
            if q is not None:
                hit = (q, lc, g)
                break
        if hit is None:
            done[idx] = c
            if not tail:
                done.update(work)
                break
            continue
        q, lc, g = hit
        factor = field.neg(field.div(c, lc))
        # every non-lead term of x^q * g is smaller than idx, so stays in work
        for (gc, gm), gcoeff in g.t.items():
            tgt = (gc, mono_mul(gm, q))
            if tgt == idx:
                continue
            s = field.add(work.get(tgt, field.zero), field.mul(gcoeff, factor))
            if s:
                work[tgt] = s
            else:
                work.pop(tgt, None)
    return MVec(done)


class Buchberger:
    """Incremental Buchberger for submodules of a free module.

    The product (coprimality) criterion is only sound for ideals, so it is
    applied just when the ambient rank is 1; the chain criterion is used in
    all ranks.  Pairs are processed in the normal strategy (by lcm degree).
    """

    def __init__(self, order: ModuleOrder, field, rank1: bool = False):
        self.order = order
        self.field = field
        self.rank1 = rank1
        self.G: list[MVec] = []
        self.leads: list = []  # (comp, mono) per element
        self.pairs: list = []  # heap of (degree, tiebreak..., i, j)
        self._by_comp: dict = {}  # lead component -> element indices
        self._nf_index: Optional[dict] = None
        self._reduced_cache: Optional[list[MVec]] = None

    # -- pair bookkeeping ------------------------------------------------------

    def _pair_entry(self, i: int, j: int):
        ci, mi = self.leads[i]
        _, mj = self.leads[j]
        lcm = mono_lcm(mi, mj)
        deg = self.order.ring.mono_deg(lcm) + self.order.twists[ci]
        return (deg, ci, self.order.ring.mono_key(lcm), i, j)

    def add_generator(self, v: MVec):
        v = reduce_vector(v, self._index(), self.order, self.field)
        if not v:
            return
        self._reduced_cache = None
        lead = v.lead(self.order)
        lc = v.t[lead]
        if lc != self.field.one:
            v = MVec({idx: self.field.div(c, lc) for idx, c in v.t.items()})
            v._lead = lead
        t = len(self.G)
        comp_t, m_t = lead
        # Gebauer-Moeller style pruning of new pairs
        same = self._by_comp.get(comp_t, [])
        lcms = {i: mono_lcm(self.leads[i][1], m_t) for i in same}
        keep: list[int] = []
        for i in same:
            li = lcms[i]
            if self.rank1 and mono_coprime(self.leads[i][1], m_t):
                continue
            dominated = False
            for j in keep:
                if lcms[j] != li and mono_divides(lcms[j], li):
                    dominated = True
                    break
            if not dominated:
                keep = [j for j in keep if not (lcms[j] != li and mono_divides(li, lcms[j]))]
                keep.append(i)
        self.G.append(v)
        self.leads.append(lead)
        self._by_comp.setdefault(comp_t, []).append(t)
        if self._nf_index is not None:
            self._nf_index.setdefault(comp_t, []).append((m_t, v.t[lead], v))
        for i in keep:
            heapq.heappush(self.pairs, self._pair_entry(i, t))

    def _index(self) -> dict:
        if self._nf_index is None:
            idx: dict = {}
            for (comp, m), g in zip(self.leads, self.G):
                idx.setdefault(comp, []).append((m, g.t[(comp, m)], g))
            self._nf_index = idx
        return self._nf_index

    def run(self):
        field, order = self.field, self.order
        while self.pairs:
            _, _, _, i, j = heapq.heappop(self.pairs)
            ci, mi = self.leads[i]
            _, mj = self.leads[j]
            lcm = mono_lcm(mi, mj)
            # chain criterion: a third element divides the lcm and both side
            # lcms are proper divisors
            skip = False
            for k in self._by_comp.get(ci, ()):
                if k == i or k == j:
                    continue
                mk = self.leads[k][1]
                if mono_divides(mk, lcm):
                    if mono_lcm(mi, mk) != lcm and mono_lcm(mj, mk) != lcm:
                        skip = True
                        break
            if skip:
                continue
            s = self._s_vector(i, j, lcm)
            s = reduce_vector(s, self._index(), order, field)
            if s:
                self.add_generator(s)

    def _s_vector(self, i: int, j: int, lcm: Monomial) -> MVec:
        field = self.field
        gi, gj = self.G[i], self.G[j]
        ci, mi = self.leads[i]
        _, mj = self.leads[j]
        qi = mono_div(lcm, mi)
        qj = mono_div(lcm, mj)
        out: dict = {}
        vec_add_scaled(out, gi.t, qi, field.one, field)
        vec_add_scaled(out, gj.t, qj, field.neg(field.one), field)
        return MVec(out)

    # -- results ----------------------------------------------------------------

    def reduced_basis(self) -> list[MVec]:
        """The reduced GB: minimal, monic, tails in normal form."""
        if self._reduced_cache is not None:
            return self._reduced_cache
        self.run()
        live = list(self.G)
        # minimalize by leading term divisibility
        live.sort(key=lambda g: self.order.key(g.lead(self.order)))
        minimal: list[MVec] = []
        for g in live:
            comp, m = g.lead(self.order)
            if not any(
                h.lead(self.order)[0] == comp and mono_divides(h.lead(self.order)[1], m)
                for h in minimal
            ):
                minimal.append(g)
        # interreduce tails
        out: list[MVec] = []
        for i, g in enumerate(minimal):
            others: dict = {}
            for j, h in enumerate(minimal):
                if i != j:
                    comp, m = h.lead(self.order)
                    others.setdefault(comp, []).append((m, h.t[(comp, m)], h))
            r = reduce_vector(g, others, self.order, self.field)
            lead = r.lead(self.order)
            lc = r.t[lead]
            if lc != self.field.one:
                r = MVec({idx: self.field.div(c, lc) for idx, c in r.t.items()})
            out.append(r)
        out.sort(key=lambda g: self.order.key(g.lead(self.order)), reverse=True)
        self._reduced_cache = out
        return out

    def nf(self, v: MVec, tail: bool = True) -> MVec:
        self.run()
        return reduce_vector(v, self._index(), self.order, self.field, tail=tail)


def module_gb(ring: GradedPolyRing, twists, vectors: list[MVec]) -> "SpanGB":
    return SpanGB(ring, twists, vectors)


class SpanGB:
    """Reduced GB of the S-span of homogeneous vectors in a free module."""

    def __init__(self, ring: GradedPolyRing, twists, vectors: list[MVec], order=None):
        self.ring = ring
        self.twists = tuple(twists)
        self.order = order or ModuleOrder(ring, twists)
        rank1 = len(self.twists) == 1
        self._engine = Buchberger(self.order, ring.field, rank1=rank1)
        for v in vectors:
            if v:
                self._engine.add_generator(v)

    def extend(self, vectors: list[MVec]):
        for v in vectors:
            if v:
                self._engine.add_generator(v)

    @property
    def basis(self) -> list[MVec]:
        return self._engine.reduced_basis()

    def nf(self, v: MVec, tail: bool = True) -> MVec:
        return self._engine.nf(v, tail=tail)

    def contains(self, v: MVec) -> bool:
        return not self._engine.nf(v, tail=False)

    def leading_module(self) -> list[tuple[int, Monomial]]:
        return [g.lead(self.order) for g in self.basis]


class SyzygyKit:
    """GB of a span with tag components: lifting plus syzygies in one run.

    Columns v_1..v_s sit in a free module of rank r; the kit computes the GB
    of span({v_i + e_i}) under the elimination order (ambient block above the
    tag block).  Elements with zero ambient part are exactly a GB of the
    syzygy module of the columns; normal forms of (v, 0) produce membership
    certificates v = sum q_i v_i.
    """

    def __init__(self, ring: GradedPolyRing, twists, columns: list[MVec], col_degrees):
        self.ring = ring
        self.rank = len(twists)
        self.ncols = len(columns)
        aug_twists = tuple(twists) + tuple(col_degrees)
        self.order = block_order(ring, aug_twists, [self.rank, self.ncols])
        engine = Buchberger(self.order, ring.field, rank1=False)
        for i, v in enumerate(columns):
            t = dict(v.t)
            t[(self.rank + i, ring._zero_mono)] = ring.field.one
            engine.add_generator(MVec(t))
        self._engine = engine

    def syzygies(self) -> list[MVec]:
        """Generators of the syzygy module, as vectors over the column tags."""
        out = []
        for g in self._engine.reduced_basis():
            if all(comp >= self.rank for comp, _ in g.t):
                out.append(MVec({(comp - self.rank, m): c for (comp, m), c in g.t.items()}))
        return out

    def lift(self, v: MVec) -> Optional[list[Poly]]:
        """Write v = sum q_i * column_i; None when v is not in the span."""
        r = self._engine.nf(MVec(dict(v.t)))
        if any(comp < self.rank for comp, _ in r.t):
            return None
        cols: list[dict] = [dict() for _ in range(self.ncols)]
        field = self.ring.field
        for (comp, m), c in r.t.items():
            cols[comp - self.rank][m] = field.neg(c)
        return [Poly(self.ring, d) for d in cols]


class Ideal:
    """Homogeneous ideal of a graded polynomial ring with cached reduced GB."""

    def __init__(self, ring: GradedPolyRing, generators: list[Poly]):
        for g in generators:
            ring.check_same(g.ring)
            if not g.is_homogeneous():
                raise ValueError(f"inhomogeneous generator {g}")
        self.ring = ring
        self.generators = [g for g in generators if not g.is_zero()]
        self._gb: Optional[SpanGB] = None

    def _kit(self) -> SpanGB:
        if self._gb is None:
            vecs = [vec_from_column([(0, g)]) for g in self.generators]
            self._gb = SpanGB(self.ring, (0,), vecs)
        return self._gb

    def groebner_basis(self) -> list[Poly]:
        return [vec_to_polys(g, 1, self.ring)[0] for g in self._kit().basis]

    def normal_form(self, f: Poly) -> Poly:
        self.ring.check_same(f.ring)
        r = self._kit().nf(vec_from_column([(0, f)]))
        return vec_to_polys(r, 1, self.ring)[0]

    def contains(self, f: Poly) -> bool:
        return self.normal_form(f).is_zero()

    def leading_monomials(self) -> list[Monomial]:
        return [m for _, m in self._kit().leading_module()]

    def is_zero(self) -> bool:
        return not self.generators

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.generators)
        return f"Ideal({gens})"
