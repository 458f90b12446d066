"""Hopf algebra presentations: grouplike/skew-primitive generators, structure
maps (coproduct, counit, antipode), bi-ideal verification for the defining
relations, tensor products, central quotients, and isomorphism checking.

The antipode is solved from the antipode axiom generator by generator, never
assumed; every structure-map identity is verified through normal forms.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from .ncalg import (FreeAlgebra, GenSymbol, NCPoly, RewriteSystem, TensorPoly,
                    Word, orient_relations)
from .scalars import CycNum


@dataclass(frozen=True)
class Grouplike:
    order: int


@dataclass(frozen=True)
class SkewPrimitive:
    left: Word   # group word appearing in the left tensor leg
    right: Word  # group word in the right tensor leg


@dataclass(frozen=True)
class CartanData:
    """Symmetrizable Cartan matrix with symmetrizers and an edge orientation.

    `orientation` lists directed edges (i, j) meaning i -> j; every pair with
    a_ij != 0, i != j must appear in exactly one direction.
    """
    a: tuple           # rows of the Cartan matrix
    d: tuple           # relatively prime symmetrizers, d_i a_ij = d_j a_ji
    orientation: tuple = ()

    def __post_init__(self):
        r = len(self.a)
        for i in range(r):
            if self.a[i][i] != 2:
                raise ValueError("Cartan diagonal must be 2")
            for j in range(r):
                if self.d[i] * self.a[i][j] != self.d[j] * self.a[j][i]:
                    raise ValueError("d_i a_ij must be symmetric")
                if i != j and self.a[i][j] > 0:
                    raise ValueError("off-diagonal Cartan entries must be <= 0")
        edges = {(i, j) for i in range(r) for j in range(r)
                 if i < j and self.a[i][j] != 0}
        oriented = {tuple(sorted(e)) for e in self.orientation}
        if oriented != edges:
            raise ValueError("orientation must cover each Dynkin edge exactly once")

    @property
    def rank(self) -> int:
        return len(self.a)

    def edge_sign(self, i: int, j: int) -> int:
        """+1 when i -> j, -1 when j -> i, 0 when not adjacent."""
        if (i, j) in self.orientation:
            return 1
        if (j, i) in self.orientation:
            return -1
        return 0

    def det(self) -> int:
        a = [list(row) for row in self.a]
        n, det = len(a), 1
        from fractions import Fraction
        m = [[Fraction(x) for x in row] for row in a]
        for c in range(n):
            piv = next((r for r in range(c, n) if m[r][c]), None)
            if piv is None:
                return 0
            if piv != c:
                m[c], m[piv] = m[piv], m[c]
                det = -det
            det *= m[c][c]
            for r in range(c + 1, n):
                f = m[r][c] / m[c][c]
                for k in range(c, n):
                    m[r][k] -= f * m[c][k]
        assert det.denominator == 1
        return int(det)


def cartan_type(name: str, orientation: Optional[Sequence[tuple]] = None) -> CartanData:
    """Small whitelist of finite-type Cartan data; orientation defaults to
    i -> i+1 along the chain."""
    name = name.upper()
    if name == "A1":
        a, d = ((2,),), (1,)
    elif name == "A1XA1":
        a, d = ((2, 0), (0, 2)), (1, 1)
    elif name == "A2":
        a, d = ((2, -1), (-1, 2)), (1, 1)
    elif name == "A3":
        a, d = ((2, -1, 0), (-1, 2, -1), (0, -1, 2)), (1, 1, 1)
    elif name == "A4":
        a = ((2, -1, 0, 0), (-1, 2, -1, 0), (0, -1, 2, -1), (0, 0, -1, 2))
        d = (1, 1, 1, 1)
    elif name == "B2":
        a, d = ((2, -2), (-1, 2)), (1, 2)
    elif name == "G2":
        a, d = ((2, -3), (-1, 2)), (1, 3)
    else:
        raise ValueError(f"unsupported Cartan type {name!r}")
    if orientation is None:
        r = len(a)
        orientation = tuple((i, j) for i in range(r) for j in range(r)
                            if i < j and a[i][j] != 0)
    return CartanData(tuple(map(tuple, a)), tuple(d), tuple(orientation))


class PresentationError(ValueError):
    pass


class HopfPresentation:
    """A pointed Hopf algebra presentation with validated structure maps."""

    def __init__(self, name: str, algebra: FreeAlgebra, kinds: dict,
                 relations: Sequence[NCPoly], scalar_order: int,
                 params: Optional[dict] = None,
                 claimed_basis: Optional[str] = None,
                 claimed_dim: Optional[int] = None,
                 validate: bool = True):
        self.name = name
        self.algebra = algebra
        self.kinds = dict(kinds)
        self.relations = list(relations)
        self.scalar_order = scalar_order
        self.params = dict(params or {})
        self.claimed_dim = claimed_dim
        self.rewrite = orient_relations(algebra, relations, claimed_basis)
        self._delta_cache: dict = {}
        self._group_idx = [i for i, k in self.kinds.items() if isinstance(k, Grouplike)]
        self._skew_idx = [i for i, k in self.kinds.items() if isinstance(k, SkewPrimitive)]
        for i in self._skew_idx:
            k = self.kinds[i]
            for w in (k.left, k.right):
                if any(j not in self._group_idx for j in w):
                    raise PresentationError(
                        f"skew primitive {self.algebra.symbols[i].name}: tag words must be grouplike")
        self.antipode_images = self._solve_antipode()
        if validate:
            self.validate()

    # -- scalars ------------------------------------------------------------

    def one_scalar(self):
        return self.algebra.one_scalar

    def zeta(self, power: int = 1) -> CycNum:
        return CycNum.zeta(self.scalar_order, power)

    # -- structure maps -------------------------------------------------------

    def counit(self, p: NCPoly):
        acc = self.algebra.zero_scalar
        for w, c in p.terms.items():
            if all(i in set(self._group_idx) for i in w):
                acc = acc + c
        return acc

    def _delta_letter(self, i: int) -> TensorPoly:
        kind = self.kinds[i]
        one = self.algebra.one_scalar
        if isinstance(kind, Grouplike):
            return TensorPoly(self.algebra, 2, {((i,), (i,)): one})
        return TensorPoly(self.algebra, 2, {(kind.left, (i,)): one,
                                            ((i,), kind.right): one})

    def _delta_word(self, w: Word) -> TensorPoly:
        got = self._delta_cache.get(w)
        if got is not None:
            return got
        if not w:
            res = TensorPoly.unit(self.algebra, 2)
        elif len(w) == 1:
            res = self._delta_letter(w[0]).normal_form(self.rewrite)
        else:
            h = len(w) // 2
            res = (self._delta_word(w[:h]) * self._delta_word(w[h:])).normal_form(self.rewrite)
        self._delta_cache[w] = res
        return res

    def coproduct(self, p: NCPoly) -> TensorPoly:
        acc = TensorPoly.zero(self.algebra, 2)
        for w, c in p.terms.items():
            acc = acc + self._delta_word(w).scale(c)
        return acc

    def group_word_inverse(self, w: Word) -> Word:
        out = []
        for i in reversed(w):
            kind = self.kinds[i]
            if not isinstance(kind, Grouplike):
                raise PresentationError("inverse of a non-group word")
            out.extend([i] * (kind.order - 1))
        return tuple(out)

    def _solve_antipode(self) -> dict:
        """Solve m(S x id)Delta(gen) = counit(gen) generator by generator and
        verify the opposite-side axiom afterwards."""
        images = {}
        for i, kind in self.kinds.items():
            if isinstance(kind, Grouplike):
                images[i] = self.algebra.from_word(((i,) * (kind.order - 1)))
            else:
                # S(left) x + S(x) right = 0, so S(x) = -left^{-1} x right^{-1}
                w = self.group_word_inverse(kind.left) + (i,) + self.group_word_inverse(kind.right)
                images[i] = self.algebra.from_word(w).scale(-1)
        return images

    def antipode(self, p: NCPoly) -> NCPoly:
        acc = self.algebra.zero()
        for w, c in p.terms.items():
            img = self.algebra.one()
            for i in reversed(w):
                img = img * self.antipode_images[i]
            acc = acc + img.scale(c)
        return self.rewrite.normal_form(acc)

    def normal(self, p: NCPoly) -> NCPoly:
        return self.rewrite.normal_form(p)

    # -- group of grouplikes --------------------------------------------------

    def group_orders(self) -> list[int]:
        return [self.kinds[i].order for i in self._group_idx]

    def group_elements(self) -> list[tuple]:
        """Exponent tuples of the (abelian) grouplike group, one per element:
        tuples whose group words coincide after rewriting (e.g. in a central
        quotient) are identified.  Commutativity is verified through normal
        forms."""
        g = self._group_idx
        for a, b in itertools.combinations(g, 2):
            pa, pb = self.algebra.from_word((a,)), self.algebra.from_word((b,))
            if self.normal(pa * pb - pb * pa):
                raise PresentationError("grouplike generators do not commute")
        out, seen = [], set()
        for t in itertools.product(*(range(self.kinds[i].order) for i in g)):
            nf = self.normal(self.algebra.from_word(self.group_word(t)))
            if len(nf.terms) != 1:
                raise PresentationError("grouplike word does not normalize to a word")
            (w, _), = nf.terms.items()
            if w in seen:
                continue
            seen.add(w)
            out.append(self.group_word_exponents(w))
        return out

    def group_word(self, exponents: Sequence[int]) -> Word:
        w: list[int] = []
        for i, e in zip(self._group_idx, exponents):
            w.extend([i] * (e % self.kinds[i].order))
        return tuple(w)

    def group_word_exponents(self, w: Word) -> tuple:
        """Exponent tuple of a word in the grouplike generators."""
        pos = {i: k for k, i in enumerate(self._group_idx)}
        acc = [0] * len(self._group_idx)
        for i in w:
            if i not in pos:
                raise PresentationError("not a group word")
            acc[pos[i]] = (acc[pos[i]] + 1) % self.kinds[i].order
        return tuple(acc)

    # -- validation -------------------------------------------------------------

    def coideal_check(self, r: NCPoly) -> bool:
        """True iff Delta(r) maps to zero in (H/I) tensor (H/I), computed by
        leg-wise normal forms; reaching zero certifies membership in
        I x H + H x I."""
        return not bool(self.coproduct(r))

    def validate(self):
        one = self.algebra.one_scalar
        for r in self.relations:
            if self.counit(r):
                raise PresentationError(f"{self.name}: counit does not kill a relation: {r!r}")
            if not self.coideal_check(r):
                raise PresentationError(f"{self.name}: relation fails the coideal check: {r!r}")
        for i in self.kinds:
            x = self.algebra.from_word((i,))
            d = self.coproduct(x)
            # counit axiom
            left = self.algebra.zero()
            right = self.algebra.zero()
            for (w1, w2), c in d.terms.items():
                left = left + self.algebra.from_word(w2, self.counit(self.algebra.from_word(w1)) * c)
                right = right + self.algebra.from_word(w1, self.counit(self.algebra.from_word(w2)) * c)
            if self.normal(left - x) or self.normal(right - x):
                raise PresentationError(f"{self.name}: counit axiom fails on generator {i}")
            # antipode axiom, both sides
            eps = self.counit(x)
            lhs = self.algebra.zero()
            rhs = self.algebra.zero()
            for (w1, w2), c in d.terms.items():
                lhs = lhs + (self.antipode(self.algebra.from_word(w1)) * self.algebra.from_word(w2)).scale(c)
                rhs = rhs + (self.algebra.from_word(w1) * self.antipode(self.algebra.from_word(w2))).scale(c)
            target = self.algebra.one().scale(eps)
            if self.normal(lhs - target) or self.normal(rhs - target):
                raise PresentationError(f"{self.name}: antipode axiom fails on generator {i}")
            # coassociativity
            d1 = self._expand_leg(d, 0)
            d2 = self._expand_leg(d, 1)
            if d1 != d2:
                raise PresentationError(f"{self.name}: coassociativity fails on generator {i}")

    def _expand_leg(self, tp: TensorPoly, leg: int) -> TensorPoly:
        acc: dict = {}
        for k, c in tp.terms.items():
            inner = self._delta_word(k[leg])
            for (u1, u2), ci in inner.terms.items():
                key = k[:leg] + (u1, u2) + k[leg + 1:]
                v = c * ci
                s = acc.get(key)
                s = v if s is None else s + v
                if s:
                    acc[key] = s
                else:
                    acc.pop(key, None)
        return TensorPoly(self.algebra, tp.nlegs + 1, acc)

    # -- convenience ----------------------------------------------------------

    def gen(self, name: str) -> NCPoly:
        return self.algebra.gen(name)

    def gens(self) -> dict:
        return {s.name: self.algebra.gen(s.name) for s in self.algebra.symbols}

    def __repr__(self):
        return f"<HopfPresentation {self.name}: {len(self.algebra.symbols)} generators, {len(self.relations)} relations>"


# -- free functions matching the module surface ------------------------------


def coproduct(h: NCPoly, H: HopfPresentation) -> TensorPoly:
    return H.coproduct(h)


def antipode(h: NCPoly, H: HopfPresentation) -> NCPoly:
    return H.antipode(h)


def coideal_check(r: NCPoly, H: HopfPresentation) -> bool:
    return H.coideal_check(r)


def tensor_product(H1: HopfPresentation, H2: HopfPresentation,
                   validate: bool = True) -> HopfPresentation:
    """H1 tensor H2: generators disjointly united (second factor renamed on
    clashes), cross-commutation relations added, kinds preserved."""
    order = math.lcm(H1.scalar_order, H2.scalar_order)
    one = CycNum.rational(1, order)
    names1 = [s.name for s in H1.algebra.symbols]
    used = set(names1)
    names2 = []
    for s in H2.algebra.symbols:
        n = s.name
        while n in used:
            n = n + "'"
        used.add(n)
        names2.append(n)
    symbols = [GenSymbol(n, s.degree) for n, s in zip(names1, H1.algebra.symbols)] + \
              [GenSymbol(n, s.degree) for n, s in zip(names2, H2.algebra.symbols)]
    A = FreeAlgebra(symbols, one)
    off = len(names1)

    def lift_poly(p: NCPoly, offset: int, src_order: int) -> NCPoly:
        terms = {}
        for w, c in p.terms.items():
            terms[tuple(i + offset for i in w)] = c.lift(order) if c.order != order else c
        return NCPoly(A, terms)

    kinds = {}
    for i, k in H1.kinds.items():
        kinds[i] = k if isinstance(k, Grouplike) else SkewPrimitive(k.left, k.right)
    for i, k in H2.kinds.items():
        if isinstance(k, Grouplike):
            kinds[i + off] = k
        else:
            kinds[i + off] = SkewPrimitive(tuple(j + off for j in k.left),
                                           tuple(j + off for j in k.right))
    relations = [lift_poly(r, 0, H1.scalar_order) for r in H1.relations]
    relations += [lift_poly(r, off, H2.scalar_order) for r in H2.relations]
    for j in range(off, len(symbols)):
        for i in range(off):
            b, a = A.from_word((j,)), A.from_word((i,))
            relations.append(b * a - a * b)
    dim = None
    if H1.claimed_dim and H2.claimed_dim:
        dim = H1.claimed_dim * H2.claimed_dim
    return HopfPresentation(f"{H1.name}(x){H2.name}", A, kinds, relations, order,
                            params={"factors": (H1.name, H2.name)},
                            claimed_dim=dim, validate=validate)


def central_quotient(H: HopfPresentation, c: Word, s: int,
                     validate: bool = True) -> HopfPresentation:
    """Adjoin c^s = 1 for a central grouplike word c."""
    for i in c:
        if not isinstance(H.kinds[i], Grouplike):
            raise PresentationError("central quotient requires a grouplike word")
    cp = H.algebra.from_word(c)
    for j in range(len(H.algebra.symbols)):
        g = H.algebra.from_word((j,))
        if H.normal(cp * g - g * cp):
            raise PresentationError(
                f"{H.algebra.word_str(c)} is not central: fails on {H.algebra.symbols[j].name}")
    new_relations = list(H.relations) + [H.algebra.from_word(c * s) - H.algebra.one()]
    # canonicalize the quotient of the abelian grouplike group: pick one
    # minimal representative per coset of <c^s> and record every other
    # exponent tuple as an extra (redundant but orienting) relation, so the
    # group part of the rewrite system stays confluent
    orders = [H.kinds[i].order for i in H._group_idx]
    step = H.group_word_exponents(c * s)
    subgroup = set()
    cur = tuple(0 for _ in orders)
    while cur not in subgroup:
        subgroup.add(cur)
        cur = tuple((a + b) % o for a, b, o in zip(cur, step, orders))
    canon: dict = {}
    key = lambda t: H.algebra.word_key(H.group_word(t))
    for t in itertools.product(*(range(o) for o in orders)):
        coset = sorted((tuple((a + b) % o for a, b, o in zip(t, k, orders)) for k in subgroup), key=key)
        canon[t] = coset[0]
    for t, rep in canon.items():
        if t != rep:
            new_relations.append(H.algebra.from_word(H.group_word(t)) -
                                 H.algebra.from_word(H.group_word(rep)))
    dim = H.claimed_dim // len(subgroup) if H.claimed_dim else None
    return HopfPresentation(f"{H.name}/({H.algebra.word_str(c)}^{s}-1)", H.algebra,
                            H.kinds, new_relations, H.scalar_order,
                            params=dict(H.params), claimed_dim=dim, validate=validate)


def _substitute(p: NCPoly, images: dict, target: HopfPresentation) -> NCPoly:
    acc = target.algebra.zero()
    for w, c in p.terms.items():
        img = target.algebra.one()
        for i in w:
            img = img * images[i]
        cc = c.lift(target.scalar_order) if getattr(c, "order", None) not in (None, target.scalar_order) else c
        acc = acc + img.scale(cc)
    return target.normal(acc)


def hopf_iso_check(mapping: dict, H1: HopfPresentation, H2: HopfPresentation,
                   inverse: Optional[dict] = None,
                   target_coproduct: Optional[Callable[[NCPoly], TensorPoly]] = None) -> bool:
    """Check that the generator assignment `mapping` (names of H1 -> NCPoly in
    H2) sends relations to zero and intertwines coproducts; bijectivity is
    certified by equal claimed dimensions plus an explicit inverse assignment
    when provided."""
    images = {H1.algebra.index[n]: p for n, p in mapping.items()}
    if len(images) != len(H1.algebra.symbols):
        raise ValueError("mapping must cover every generator")
    for r in H1.relations:
        if _substitute(r, images, H2):
            return False
    delta2 = target_coproduct or H2.coproduct
    for i in range(len(H1.algebra.symbols)):
        d1 = H1.coproduct(H1.algebra.from_word((i,)))
        lhs = TensorPoly.zero(H2.algebra, 2)
        for (w1, w2), c in d1.terms.items():
            p1 = _substitute(H1.algebra.from_word(w1), images, H2)
            p2 = _substitute(H1.algebra.from_word(w2), images, H2)
            cc = c.lift(H2.scalar_order) if getattr(c, "order", None) != H2.scalar_order else c
            lhs = lhs + TensorPoly.of([p1, p2]).scale(cc)
        rhs = delta2(images[i]).normal_form(H2.rewrite)
        if lhs.normal_form(H2.rewrite) != rhs:
            return False
    if H1.claimed_dim and H2.claimed_dim and H1.claimed_dim != H2.claimed_dim:
        return False
    if inverse is not None:
        inv_images = {H2.algebra.index[n]: p for n, p in inverse.items()}
        for i, name in enumerate(s.name for s in H1.algebra.symbols):
            round_trip = _substitute(images[i], inv_images, H1)
            if H1.normal(round_trip - H1.algebra.gen(name)):
                return False
        for j, name in enumerate(s.name for s in H2.algebra.symbols):
            round_trip = _substitute(inv_images[j], images, H2)
            if H2.normal(round_trip - H2.algebra.gen(name)):
                return False
    return True
