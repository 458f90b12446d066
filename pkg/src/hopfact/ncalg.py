"""Noncommutative polynomial arithmetic, rewriting to normal form under
oriented relation systems, and a length-capped exact linear-algebra oracle
for quotient dimensions.

Words are tuples of symbol indices.  The word order is degree-first (group
generators carry degree 0, skew primitives degree 1), then length, then
lexicographic in declaration order; every rule must strictly decrease it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence

Word = tuple


class NonterminationError(RuntimeError):
    """Raised when a rewrite exceeds its step budget."""


@dataclass(frozen=True)
class GenSymbol:
    name: str
    degree: int = 1  # grouplikes 0, skew primitives 1


class FreeAlgebra:
    """Free associative algebra on named generators over an exact field.

    `one` is the multiplicative unit of the scalar field; all coefficient
    arithmetic is duck-typed through it (CycNum and RatFunc both work).
    """

    def __init__(self, symbols: Sequence[GenSymbol], one):
        names = [s.name for s in symbols]
        if len(set(names)) != len(names):
            raise ValueError("generator names must be unique")
        self.symbols = tuple(symbols)
        self.index = {s.name: i for i, s in enumerate(symbols)}
        self.degrees = tuple(s.degree for s in symbols)
        self.one_scalar = one
        self.zero_scalar = one * 0

    def word(self, *names: str) -> Word:
        return tuple(self.index[n] for n in names)

    def word_degree(self, w: Word) -> int:
        return sum(self.degrees[i] for i in w)

    def word_key(self, w: Word):
        return (self.word_degree(w), len(w), w)

    def word_str(self, w: Word) -> str:
        if not w:
            return "1"
        out = []
        for sym, grp in itertools.groupby(w):
            k = len(list(grp))
            name = self.symbols[sym].name
            out.append(name if k == 1 else f"{name}^{k}")
        return "*".join(out)

    # -- element constructors ------------------------------------------------

    def poly(self, terms) -> "NCPoly":
        if isinstance(terms, dict):
            items = terms.items()
        else:
            items = [(w, c) for c, w in terms]
        acc: dict = {}
        for w, c in items:
            if isinstance(c, int):
                c = self.one_scalar * c
            s = acc.get(w)
            s = c if s is None else s + c
            if s:
                acc[w] = s
            else:
                acc.pop(w, None)
        return NCPoly(self, acc)

    def gen(self, name: str) -> "NCPoly":
        return NCPoly(self, {(self.index[name],): self.one_scalar})

    def one(self) -> "NCPoly":
        return NCPoly(self, {(): self.one_scalar})

    def zero(self) -> "NCPoly":
        return NCPoly(self, {})

    def from_word(self, w: Word, coeff=None) -> "NCPoly":
        if coeff is None:
            coeff = self.one_scalar
        elif isinstance(coeff, int):
            coeff = self.one_scalar * coeff
        return NCPoly(self, {w: coeff} if coeff else {})


class NCPoly:
    """Finite scalar combination of words; no zero coefficients stored."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: FreeAlgebra, terms: dict):
        self.algebra = algebra
        self.terms = terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, NCPoly):
            if self.algebra is not other.algebra:
                return NotImplemented
            if self.terms.keys() != other.terms.keys():
                return False
            return all(not (c - other.terms[w]) for w, c in self.terms.items())
        return NotImplemented

    __hash__ = None

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        acc = dict(self.terms)
        for w, c in other.terms.items():
            s = acc.get(w)
            s = c if s is None else s + c
            if s:
                acc[w] = s
            else:
                acc.pop(w, None)
        return NCPoly(self.algebra, acc)

    __radd__ = __add__

    def __neg__(self):
        return NCPoly(self.algebra, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, NCPoly):
            acc: dict = {}
            for w1, c1 in self.terms.items():
                for w2, c2 in other.terms.items():
                    w = w1 + w2
                    c = c1 * c2
                    s = acc.get(w)
                    s = c if s is None else s + c
                    if s:
                        acc[w] = s
                    else:
                        acc.pop(w, None)
            return NCPoly(self.algebra, acc)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "NCPoly":
        if isinstance(c, int):
            c = self.algebra.one_scalar * c
        if not c:
            return NCPoly(self.algebra, {})
        return NCPoly(self.algebra, {w: v * c for w, v in self.terms.items()})

    def __pow__(self, n: int):
        out = self.algebra.one()
        for _ in range(n):
            out = out * self
        return out

    def lead_word(self) -> Word:
        return max(self.terms, key=self.algebra.word_key)

    def max_word_len(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    def __repr__(self):
        if not self.terms:
            return "0"
        ws = sorted(self.terms, key=self.algebra.word_key, reverse=True)
        return " + ".join(f"({self.terms[w]!r})*{self.algebra.word_str(w)}" for w in ws)


class RewriteSystem:
    """Oriented rules lhs -> rhs, each strictly decreasing the word order.

    Rules are produced from relations by `orient_relations`, so every rule's
    lhs - rhs lies in the relation ideal by construction.  Reducing a
    polynomial to zero therefore certifies ideal membership regardless of
    confluence; claimed normal-form bases are cross-checked separately by
    `truncated_quotient_dim`.
    """

    def __init__(self, algebra: FreeAlgebra, rules: Sequence[tuple],
                 claimed_basis: Optional[str] = None, max_steps: int = 10 ** 6):
        self.algebra = algebra
        self.rules = list(rules)
        self.claimed_basis = claimed_basis
        self.max_steps = max_steps
        self._validate()
        self._by_first: dict = {}
        for ruleno, (lhs, rhs) in enumerate(self.rules):
            self._by_first.setdefault(lhs[0], []).append((lhs, rhs))
        self._memo: dict = {}
        self._steps = 0

    def _validate(self):
        key = self.algebra.word_key
        for lhs, rhs in self.rules:
            if not lhs:
                raise ValueError("empty rule lhs")
            for w in rhs.terms:
                if key(w) >= key(lhs):
                    raise ValueError(
                        f"rule does not decrease the word order: "
                        f"{self.algebra.word_str(lhs)} -> {self.algebra.word_str(w)}")

    def length_compatible(self) -> bool:
        return all(len(w) <= len(lhs) for lhs, rhs in self.rules for w in rhs.terms)

    def find_redex(self, w: Word):
        for i in range(len(w)):
            cands = self._by_first.get(w[i])
            if not cands:
                continue
            for lhs, rhs in cands:
                if w[i:i + len(lhs)] == lhs:
                    return i, lhs, rhs
        return None

    def is_normal_word(self, w: Word) -> bool:
        return self.find_redex(w) is None

    def nf_word(self, w: Word, _depth: int = 0) -> dict:
        """Normal form of a single word as dict word -> scalar."""
        memo = self._memo
        got = memo.get(w)
        if got is not None:
            return got
        redex = self.find_redex(w)
        if redex is None:
            res = {w: self.algebra.one_scalar}
            memo[w] = res
            return res
        if _depth > 300:
            return self._nf_word_iterative(w)
        i, lhs, rhs = redex
        tail = i + len(lhs)
        acc: dict = {}
        for u, c in rhs.terms.items():
            self._bump()
            piece = self.nf_word(w[:i] + u + w[tail:], _depth + 1)
            for nw, nc in piece.items():
                s = acc.get(nw)
                v = nc * c
                s = v if s is None else s + v
                if s:
                    acc[nw] = s
                else:
                    acc.pop(nw, None)
        memo[w] = acc
        return acc

    def _nf_word_iterative(self, w: Word) -> dict:
        acc: dict = {}
        stack = [(w, self.algebra.one_scalar)]
        memo = self._memo
        while stack:
            cur, coeff = stack.pop()
            got = memo.get(cur)
            if got is not None:
                for nw, nc in got.items():
                    s = acc.get(nw)
                    v = nc * coeff
                    s = v if s is None else s + v
                    if s:
                        acc[nw] = s
                    else:
                        acc.pop(nw, None)
                continue
            redex = self.find_redex(cur)
            if redex is None:
                memo[cur] = {cur: self.algebra.one_scalar}
                s = acc.get(cur)
                s = coeff if s is None else s + coeff
                if s:
                    acc[cur] = s
                else:
                    acc.pop(cur, None)
                continue
            i, lhs, rhs = redex
            tail = i + len(lhs)
            for u, c in rhs.terms.items():
                self._bump()
                stack.append((cur[:i] + u + cur[tail:], coeff * c))
        return acc

    def _bump(self):
        self._steps += 1
        if self._steps > self.max_steps:
            raise NonterminationError(
                f"rewrite exceeded {self.max_steps} steps; reported as nontermination")

    def normal_form(self, p: NCPoly) -> NCPoly:
        self._steps = 0
        acc: dict = {}
        for w, c in p.terms.items():
            for nw, nc in self.nf_word(w).items():
                s = acc.get(nw)
                v = nc * c
                s = v if s is None else s + v
                if s:
                    acc[nw] = s
                else:
                    acc.pop(nw, None)
        return NCPoly(p.algebra, acc)

    def normal_words(self, max_len: int) -> list[list[Word]]:
        """Rule-irreducible words grouped by length, lengths 0..max_len."""
        lhs_set = {lhs for lhs, _ in self.rules}
        max_lhs = max((len(l) for l in lhs_set), default=1)
        levels = [[()]]
        nsym = len(self.algebra.symbols)
        for ln in range(1, max_len + 1):
            nxt = []
            for w in levels[-1]:
                for s in range(nsym):
                    w2 = w + (s,)
                    # a new redex can only end at the last letter
                    for k in range(2, min(max_lhs, ln) + 1):
                        if w2[ln - k:] in lhs_set:
                            break
                    else:
                        if (s,) not in lhs_set:
                            nxt.append(w2)
            levels.append(nxt)
        return levels


def orient_relations(algebra: FreeAlgebra, relations: Sequence[NCPoly],
                     claimed_basis: Optional[str] = None,
                     max_steps: int = 10 ** 6) -> RewriteSystem:
    """Orient each relation (an NCPoly equal to zero in the quotient) into a
    rule replacing its leading word, then normalize the right-hand sides
    against the whole system."""
    rules = []
    for rel in relations:
        if not rel:
            continue
        lead = rel.lead_word()
        coef = rel.terms[lead]
        rest = NCPoly(algebra, {w: c for w, c in rel.terms.items() if w != lead})
        rhs = rest.scale(algebra.one_scalar * -1) * coef.inverse() if hasattr(coef, "inverse") else rest.scale(-1 / coef)
        rules.append((lead, rhs))
    # inter-reduce right-hand sides so the stored system is as tight as the
    # rules allow (sound: only ideal elements are subtracted)
    for _ in range(4):
        rs = RewriteSystem(algebra, rules, claimed_basis, max_steps)
        new_rules = []
        changed = False
        for lhs, rhs in rules:
            nf = rs.normal_form(rhs)
            if nf.terms != rhs.terms:
                changed = True
            new_rules.append((lhs, nf))
        rules = new_rules
        if not changed:
            break
    return RewriteSystem(algebra, rules, claimed_basis, max_steps)


def normal_form(p: NCPoly, rs: RewriteSystem) -> NCPoly:
    return rs.normal_form(p)


class TensorPoly:
    """Element of the n-fold algebra tensor power: scalar combinations of
    tuples of words, with legs multiplying independently."""

    __slots__ = ("algebra", "nlegs", "terms")

    def __init__(self, algebra: FreeAlgebra, nlegs: int, terms: dict):
        self.algebra = algebra
        self.nlegs = nlegs
        self.terms = terms

    @staticmethod
    def unit(algebra: FreeAlgebra, nlegs: int) -> "TensorPoly":
        return TensorPoly(algebra, nlegs, {((),) * nlegs: algebra.one_scalar})

    @staticmethod
    def zero(algebra: FreeAlgebra, nlegs: int) -> "TensorPoly":
        return TensorPoly(algebra, nlegs, {})

    @staticmethod
    def of(legs: Sequence[NCPoly]) -> "TensorPoly":
        algebra = legs[0].algebra
        acc: dict = {}
        for combo in itertools.product(*(p.terms.items() for p in legs)):
            ws = tuple(w for w, _ in combo)
            c = legs[0].algebra.one_scalar
            for _, ci in combo:
                c = c * ci
            s = acc.get(ws)
            s = c if s is None else s + c
            if s:
                acc[ws] = s
            else:
                acc.pop(ws, None)
        return TensorPoly(algebra, len(legs), acc)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, TensorPoly):
            return NotImplemented
        if self.terms.keys() != other.terms.keys():
            return False
        return all(not (c - other.terms[k]) for k, c in self.terms.items())

    __hash__ = None

    def __add__(self, other):
        acc = dict(self.terms)
        for k, c in other.terms.items():
            s = acc.get(k)
            s = c if s is None else s + c
            if s:
                acc[k] = s
            else:
                acc.pop(k, None)
        return TensorPoly(self.algebra, self.nlegs, acc)

    def __neg__(self):
        return TensorPoly(self.algebra, self.nlegs, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "TensorPoly":
        if isinstance(c, int):
            c = self.algebra.one_scalar * c
        if not c:
            return TensorPoly.zero(self.algebra, self.nlegs)
        return TensorPoly(self.algebra, self.nlegs, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, TensorPoly):
            acc: dict = {}
            for k1, c1 in self.terms.items():
                for k2, c2 in other.terms.items():
                    k = tuple(a + b for a, b in zip(k1, k2))
                    c = c1 * c2
                    s = acc.get(k)
                    s = c if s is None else s + c
                    if s:
                        acc[k] = s
                    else:
                        acc.pop(k, None)
            return TensorPoly(self.algebra, self.nlegs, acc)
        return self.scale(other)

    __rmul__ = __mul__

    def normal_form(self, rs: RewriteSystem) -> "TensorPoly":
        acc: dict = {}
        for k, c in self.terms.items():
            nfs = [rs.nf_word(w) for w in k]
            for combo in itertools.product(*(n.items() for n in nfs)):
                ws = tuple(w for w, _ in combo)
                v = c
                for _, ci in combo:
                    v = v * ci
                s = acc.get(ws)
                s = v if s is None else s + v
                if s:
                    acc[ws] = s
                else:
                    acc.pop(ws, None)
        return TensorPoly(self.algebra, self.nlegs, acc)

    def apply_leg(self, leg: int, fn: Callable[[NCPoly], NCPoly]) -> "TensorPoly":
        """Apply a linear map (given on polynomials) to one tensor leg."""
        acc: dict = {}
        for k, c in self.terms.items():
            image = fn(NCPoly(self.algebra, {k[leg]: self.algebra.one_scalar}))
            for w, ci in image.terms.items():
                k2 = k[:leg] + (w,) + k[leg + 1:]
                v = c * ci
                s = acc.get(k2)
                s = v if s is None else s + v
                if s:
                    acc[k2] = s
                else:
                    acc.pop(k2, None)
        return TensorPoly(self.algebra, self.nlegs, acc)


def tensor_normal_form(tp: TensorPoly, rs: RewriteSystem) -> TensorPoly:
    return tp.normal_form(rs)


# -- truncated quotient dimension -------------------------------------------


@dataclass
class QuotientDim:
    dim: Optional[int]            # stabilized dimension, None when inconclusive
    stabilized: bool
    dim_at_cap: int
    dim_below_cap: int
    cap: int
    reason: str = ""

    def __bool__(self):
        return self.stabilized


class _Staircase:
    """Sparse row echelon keyed by leading word; exact over any field."""

    def __init__(self, word_key):
        self.rows: dict = {}
        self.word_key = word_key

    def reduce(self, vec: dict) -> dict:
        while vec:
            lead = max(vec, key=self.word_key)
            row = self.rows.get(lead)
            if row is None:
                return vec
            c = vec[lead]
            for w, rc in row.items():
                s = vec.get(w)
                v = rc * c
                s = -v if s is None else s - v
                if s:
                    vec[w] = s
                else:
                    vec.pop(w, None)
        return vec

    def insert(self, vec: dict) -> bool:
        vec = self.reduce(vec)
        if not vec:
            return False
        lead = max(vec, key=self.word_key)
        c = vec[lead]
        inv = c.inverse() if hasattr(c, "inverse") else 1 / c
        self.rows[lead] = {w: v * inv for w, v in vec.items()}
        return True


def truncated_quotient_dim(rs: RewriteSystem, relations: Sequence[NCPoly],
                           cap: int) -> QuotientDim:
    """Dimension of the length-filtered slice of the quotient algebra.

    Exact linear algebra on the length <= cap slice of the free algebra
    modulo the matching slice of the two-sided ideal; rule rewriting is used
    only as a (sound) fast path for row reduction.  The answer at the cap is
    compared with the answer one level below; equality is reported as
    stabilization, which for an algebra that is finite dimensional with all
    claimed basis words below the cap gives the algebra dimension.
    """
    algebra = rs.algebra
    levels = rs.normal_words(cap)
    closed_at = next((k for k, l in enumerate(levels) if not l), None)
    if closed_at is not None:
        # the normal words close out strictly below the cap: the quotient is
        # spanned by finitely many normal words and the exact dimension is
        # #normal - rank of the reduced relation paddings over all of them
        normals = [w for l in levels for w in l]
        stair = _Staircase(algebra.word_key)
        pivots = 0
        rs._steps = 0
        rs.max_steps = max(rs.max_steps, 10 ** 7)
        for rel in relations:
            if not rel:
                continue
            for a in normals:
                for b in normals:
                    vec: dict = {}
                    for w, c in rel.terms.items():
                        for nw, nc in rs.nf_word(a + w + b).items():
                            v = nc * c
                            s = vec.get(nw)
                            s = v if s is None else s + v
                            if s:
                                vec[nw] = s
                            else:
                                vec.pop(nw, None)
                    if vec and stair.insert(vec):
                        pivots += 1
        d = len(normals) - pivots
        return QuotientDim(d, True, d, d, cap)

    if not rs.length_compatible():
        return QuotientDim(None, False, -1, -1, cap,
                           "rewrite rules increase word length and normal words "
                           "do not close below the cap")

    normals_le = [sum(len(l) for l in levels[:k + 1]) for k in range(cap + 1)]

    def run(bound: int) -> int:
        stair = _Staircase(algebra.word_key)
        pivots = 0
        for rel in relations:
            if not rel:
                continue
            rlen = rel.max_word_len()
            budget = bound - rlen
            if budget < 0:
                continue
            for la in range(budget + 1):
                for a in levels[la]:
                    for lb in range(budget - la + 1):
                        for b in levels[lb]:
                            vec: dict = {}
                            for w, c in rel.terms.items():
                                full = a + w + b
                                for nw, nc in rs.nf_word(full).items():
                                    v = nc * c
                                    s = vec.get(nw)
                                    s = v if s is None else s + v
                                    if s:
                                        vec[nw] = s
                                    else:
                                        vec.pop(nw, None)
                            if vec and stair.insert(vec):
                                pivots += 1
        return normals_le[bound] - pivots

    rs._steps = 0
    rs.max_steps = max(rs.max_steps, 10 ** 7)
    dim_below = run(cap - 1)
    dim_at = run(cap)
    if dim_at == dim_below:
        return QuotientDim(dim_at, True, dim_at, dim_below, cap)
    return QuotientDim(None, False, dim_at, dim_below, cap,
                       f"no stabilization: {dim_below} at cap {cap - 1} vs {dim_at} at cap {cap}")
